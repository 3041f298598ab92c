#include "mcat/mcat.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "mcat/error.hpp"
#include "mcat/serialize.hpp"

struct mcat_word {
  mcat::Word value;
};
struct mcat_poly {
  mcat::WeightPoly value;
};
struct mcat_params {
  mcat::ChainParams value;
};
struct mcat_grid {
  std::vector<mcat::RatePoint> value;
};
struct mcat_ruleset {
  mcat::RuleSet value;
};
struct mcat_report {
  bool passed = false;
  mcat::Json json;
};

namespace {

thread_local std::string g_last_error;

mcat_status status_of(mcat::ErrorCode code) {
  switch (code) {
    case mcat::ErrorCode::invalid_argument: return MCAT_INVALID_ARGUMENT;
    case mcat::ErrorCode::not_irreducible: return MCAT_NOT_IRREDUCIBLE;
    case mcat::ErrorCode::singular_system: return MCAT_SINGULAR;
    case mcat::ErrorCode::internal: return MCAT_INTERNAL_ERROR;
  }
  return MCAT_INTERNAL_ERROR;
}

template <typename F>
mcat_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const mcat::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MCAT_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MCAT_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) mcat::fail(mcat::ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

mcat::Rational rational_arg(const char* text, const char* fallback) {
  return mcat::parse_rational(text != nullptr ? text : fallback);
}

std::vector<int> sectors(int m, int r) {
  if (m < 1) mcat::fail(mcat::ErrorCode::invalid_argument, "m must be at least 1");
  if (r > m) {
    mcat::fail(mcat::ErrorCode::invalid_argument, "r = " + std::to_string(r) + " exceeds m = " + std::to_string(m));
  }
  std::vector<int> out;
  if (r >= 0) {
    out.push_back(r);
  } else {
    for (int k = 0; k <= m; ++k) out.push_back(k);
  }
  return out;
}

const std::vector<mcat::RatePoint>& grid_or_default(const mcat_grid* g) {
  static const std::vector<mcat::RatePoint> fallback = mcat::default_grid();
  return g != nullptr ? g->value : fallback;
}

const mcat::RuleSet& rules_or_default(const mcat_ruleset* r) {
  static const mcat::RuleSet fallback = mcat::RuleSet::standard();
  return r != nullptr ? r->value : fallback;
}

mcat_status emit_report(bool passed, mcat::Json json, mcat_report** out) {
  require(out, "out");
  *out = new mcat_report{passed, std::move(json)};
  return passed ? MCAT_OK : MCAT_CHECK_FAILED;
}

// One report for a single sector, or an aggregate over several.
template <typename Run>
mcat_status sector_reports(int m, int r, const char* check, mcat_report** out, Run&& run) {
  const auto rs = sectors(m, r);
  if (rs.size() == 1) {
    auto [passed, json] = run(rs.front());
    return emit_report(passed, std::move(json), out);
  }
  bool all = true;
  mcat::Json parts = mcat::Json::array();
  for (int rr : rs) {
    auto [passed, json] = run(rr);
    all = all && passed;
    parts.push_back(std::move(json));
  }
  return emit_report(all, mcat::Json{{"check", check}, {"passed", all}, {"m", m}, {"sectors", parts}}, out);
}

std::string ascii_block(const std::string& body, const std::string& weight) { return body + "weight " + weight + "\n"; }

}  // namespace

extern "C" {

const char* mcat_version(void) { return "0.1.0"; }

const char* mcat_last_error(void) { return g_last_error.c_str(); }

void mcat_string_free(char* s) { std::free(s); }

mcat_status mcat_word_parse(const char* text, mcat_word** out, size_t* error_index) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    try {
      *out = new mcat_word{mcat::Word::parse(text)};
    } catch (const mcat::WordParseError& e) {
      if (error_index != nullptr) *error_index = e.position();
      throw;
    }
    return MCAT_OK;
  });
}

void mcat_word_free(mcat_word* w) { delete w; }

int mcat_word_length(const mcat_word* w) { return w != nullptr ? w->value.length() : -1; }

int mcat_word_count(const mcat_word* w, char letter) {
  if (w == nullptr) return -1;
  switch (letter) {
    case 'D': return w->value.d_count();
    case 'E': return w->value.e_count();
    case 'A': return w->value.a_count();
    default: return -1;
  }
}

mcat_status mcat_word_string(const mcat_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = dup(w->value.str());
    return MCAT_OK;
  });
}

mcat_status mcat_word_shape_json(const mcat_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = dup(mcat::to_json(mcat::shape_of(w->value)).dump());
    return MCAT_OK;
  });
}

mcat_status mcat_word_decompose_json(const mcat_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = dup(mcat::to_json(mcat::de_decompose(w->value)).dump());
    return MCAT_OK;
  });
}

mcat_status mcat_word_weight(const mcat_word* w, mcat_poly** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = new mcat_poly{mcat::word_weight(w->value)};
    return MCAT_OK;
  });
}

mcat_status mcat_partition_function(int m, int r, mcat_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mcat_poly{mcat::partition_function(m, r)};
    return MCAT_OK;
  });
}

void mcat_poly_free(mcat_poly* p) { delete p; }

mcat_status mcat_poly_text(const mcat_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(p->value.to_string());
    return MCAT_OK;
  });
}

mcat_status mcat_poly_json(const mcat_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(mcat::to_json(p->value).dump());
    return MCAT_OK;
  });
}

mcat_status mcat_poly_eval(const mcat_poly* p, const char* alpha, const char* beta, const char* q, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    const auto value = p->value.eval(rational_arg(alpha, "1"), rational_arg(beta, "1"), rational_arg(q, "0"));
    *out = dup(mcat::to_string(value));
    return MCAT_OK;
  });
}

mcat_status mcat_params_create(const char* alpha, const char* beta, const char* q, mcat_params** out) {
  return guarded([&] {
    require(out, "out");
    mcat::ChainParams params{rational_arg(alpha, "1"), rational_arg(beta, "1"), rational_arg(q, "0")};
    params.check();
    *out = new mcat_params{std::move(params)};
    return MCAT_OK;
  });
}

void mcat_params_free(mcat_params* p) { delete p; }

mcat_status mcat_grid_parse(const char* text, mcat_grid** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new mcat_grid{mcat::parse_grid(text)};
    return MCAT_OK;
  });
}

mcat_grid* mcat_grid_default(void) { return new mcat_grid{mcat::default_grid()}; }

size_t mcat_grid_size(const mcat_grid* g) { return g != nullptr ? g->value.size() : 0; }

void mcat_grid_free(mcat_grid* g) { delete g; }

mcat_ruleset* mcat_ruleset_default(void) { return new mcat_ruleset{mcat::RuleSet::standard()}; }

mcat_status mcat_ruleset_from_json(const char* json, mcat_ruleset** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new mcat_ruleset{mcat::RuleSet::from_json(json)};
    return MCAT_OK;
  });
}

void mcat_ruleset_free(mcat_ruleset* r) { delete r; }

mcat_status mcat_enumerate(const mcat_word* w, int staircase, mcat_format format, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    if (format != MCAT_FORMAT_JSON && format != MCAT_FORMAT_ASCII) {
      mcat::fail(mcat::ErrorCode::invalid_argument, "enumerate supports json and ascii output");
    }
    std::string text;
    mcat::Json list = mcat::Json::array();
    auto weight_text = [](const mcat::Monomial& m) {
      return mcat::WeightPoly::monomial(m.a, m.b).to_string();
    };
    if (staircase != 0) {
      for (const auto& t : mcat::enumerate_staircase(w->value)) {
        list.push_back(mcat::to_json(t));
        text += (text.empty() ? "" : "\n") + ascii_block(mcat::render_ascii(t), weight_text(t.weight()));
      }
    } else {
      for (const auto& t : mcat::enumerate_condensed(w->value)) {
        list.push_back(mcat::to_json(t));
        text += (text.empty() ? "" : "\n") + ascii_block(mcat::render_ascii(t), weight_text(t.weight()));
      }
    }
    if (format == MCAT_FORMAT_JSON) {
      text = mcat::Json{{"word", w->value.str()},
                        {"form", staircase != 0 ? "staircase" : "condensed"},
                        {"count", list.size()},
                        {"tableaux", list}}
                 .dump(2) +
             "\n";
    }
    *out = dup(text);
    return MCAT_OK;
  });
}

mcat_status mcat_stationary(int m, int r, const mcat_params* params, mcat_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const mcat::ChainParams p = params != nullptr ? params->value : mcat::ChainParams{};
    const auto chain = mcat::build_sector_chain(m, r, p);
    const auto pi = mcat::stationary(chain);
    if (format == MCAT_FORMAT_CSV) {
      *out = dup(mcat::stationary_csv(pi));
    } else if (format == MCAT_FORMAT_JSON) {
      *out = dup(mcat::stationary_json(chain, pi).dump(2) + "\n");
    } else {
      mcat::fail(mcat::ErrorCode::invalid_argument, "stationary supports json and csv output");
    }
    return MCAT_OK;
  });
}

mcat_status mcat_count_table(int m, int r, int brute, mcat_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    if (format != MCAT_FORMAT_JSON && format != MCAT_FORMAT_CSV) {
      mcat::fail(mcat::ErrorCode::invalid_argument, "count supports json and csv output");
    }
    std::string csv = brute != 0 ? "m,r,k,count,enumerated\n" : "m,r,k,count\n";
    mcat::Json rows = mcat::Json::array();
    for (int rr : sectors(m, r)) {
      std::map<int, mcat::Integer> enumerated;
      if (brute != 0) enumerated = mcat::enumerate_counts_by_k(m, rr);
      for (int k = 0; k <= m - rr; ++k) {
        const auto count = mcat::count_nkr(m, k, rr);
        csv += std::to_string(m) + "," + std::to_string(rr) + "," + std::to_string(k) + "," + count.get_str();
        mcat::Json row{{"m", m}, {"r", rr}, {"k", k}, {"count", count.get_str()}};
        if (brute != 0) {
          csv += "," + enumerated[k].get_str();
          row["enumerated"] = enumerated[k].get_str();
        }
        csv += "\n";
        rows.push_back(std::move(row));
      }
    }
    *out = dup(format == MCAT_FORMAT_CSV ? csv : rows.dump(2) + "\n");
    return MCAT_OK;
  });
}

mcat_status mcat_det(const mcat_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    const auto dec = mcat::de_decompose(w->value);
    mcat::Json blocks = mcat::Json::array();
    for (std::size_t i = 0; i < dec.subwords.size(); ++i) {
      const auto& parts = dec.partitions[i].parts;
      mcat::Json matrix = mcat::Json::array();
      for (const auto& row : mcat::build_det_matrix(parts)) {
        mcat::Json r = mcat::Json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        matrix.push_back(std::move(r));
      }
      blocks.push_back({{"subword", dec.subwords[i].str()},
                        {"parts", parts},
                        {"matrix", matrix},
                        {"determinant", mcat::det_weight(parts).to_string()}});
    }
    const auto check = mcat::det_weight_check(w->value);
    *out = dup(mcat::Json{{"word", w->value.str()}, {"blocks", blocks}, {"check", mcat::to_json(check)}}.dump(2) +
               "\n");
    return MCAT_OK;
  });
}

mcat_status mcat_tableau_graph(int m, int r, mcat_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    const char* name = format == MCAT_FORMAT_JSON ? "json" : format == MCAT_FORMAT_CSV ? "csv"
                                                         : format == MCAT_FORMAT_DOT ? "dot"
                                                                                     : "ascii";
    if (r < 0 || r > m) mcat::fail(mcat::ErrorCode::invalid_argument, "graph needs 0 <= r <= m");
    *out = dup(mcat::chain_graph(mcat::build_tableau_chain(m, r), name));
    return MCAT_OK;
  });
}

mcat_status mcat_q1_enumerate(const mcat_word* w, const mcat_ruleset* rules, mcat_format format, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    const auto tableaux = mcat::enumerate_alt(w->value, rules_or_default(rules));
    if (format == MCAT_FORMAT_ASCII) {
      std::string text;
      for (const auto& t : tableaux) {
        text += (text.empty() ? "" : "\n") + ascii_block(mcat::render_ascii(t), mcat::alt_weight(t, true).to_string());
      }
      *out = dup(text);
    } else if (format == MCAT_FORMAT_JSON) {
      mcat::Json list = mcat::Json::array();
      for (const auto& t : tableaux) list.push_back(mcat::to_json(t));
      *out = dup(mcat::Json{{"word", w->value.str()},
                            {"ruleset", rules_or_default(rules).name},
                            {"count", list.size()},
                            {"tableaux", list}}
                     .dump(2) +
                 "\n");
    } else {
      mcat::fail(mcat::ErrorCode::invalid_argument, "q1 enumerate supports json and ascii output");
    }
    return MCAT_OK;
  });
}

mcat_status mcat_verify_main_theorem(int m, int r, const mcat_grid* grid, mcat_report** out) {
  return guarded([&] {
    sectors(m, r);
    const auto rep = mcat::verify_stationary_theorem(m, r >= 0 ? std::optional<int>(r) : std::nullopt,
                                                     grid_or_default(grid));
    return emit_report(rep.passed(), mcat::to_json(rep), out);
  });
}

mcat_status mcat_verify_ansatz(int m_max, mcat_report** out) {
  return guarded([&] {
    const auto rep = mcat::verify_ansatz(m_max);
    return emit_report(rep.passed(), mcat::to_json(rep), out);
  });
}

mcat_status mcat_verify_balance(int m, int r, const mcat_grid* grid, mcat_report** out) {
  return guarded([&] {
    return sector_reports(m, r, "balance", out, [&](int rr) {
      const auto rep = mcat::verify_detailed_balance(m, rr, grid_or_default(grid));
      return std::pair{rep.passed(), mcat::to_json(rep)};
    });
  });
}

mcat_status mcat_verify_projection(int m, int r, const mcat_grid* grid, mcat_report** out) {
  return guarded([&] {
    return sector_reports(m, r, "projection", out, [&](int rr) {
      const auto rep = mcat::verify_projection(m, rr, grid_or_default(grid));
      return std::pair{rep.passed(), mcat::to_json(rep)};
    });
  });
}

mcat_status mcat_q1_verify(int m, int r, const mcat_ruleset* rules, const mcat_grid* grid, mcat_report** out) {
  return guarded([&] {
    return sector_reports(m, r, "q1-conjecture", out, [&](int rr) {
      const auto rep = mcat::verify_conjecture(m, rr, rules_or_default(rules), grid_or_default(grid));
      return std::pair{rep.passed(), mcat::to_json(rep)};
    });
  });
}

mcat_status mcat_q1_consistency(int m, int r, const mcat_ruleset* rules, mcat_report** out) {
  return guarded([&] {
    return sector_reports(m, r, "q0-consistency", out, [&](int rr) {
      const auto rep = mcat::q0_consistency(m, rr, rules_or_default(rules));
      return std::pair{rep.passed(), mcat::to_json(rep)};
    });
  });
}

mcat_status mcat_q1_sweep(int m_max, const mcat_grid* grid, mcat_report** out) {
  return guarded([&] {
    if (m_max < 1) mcat::fail(mcat::ErrorCode::invalid_argument, "m must be at least 1");
    const auto sweep = mcat::sweep_rulesets(m_max, grid_or_default(grid), mcat::candidate_rulesets());
    auto json = mcat::to_json(sweep);
    const bool passed = json["passed"].get<bool>();
    return emit_report(passed, std::move(json), out);
  });
}

int mcat_report_passed(const mcat_report* r) { return r != nullptr && r->passed ? 1 : 0; }

mcat_status mcat_report_json(const mcat_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(r->json.dump(2) + "\n");
    return MCAT_OK;
  });
}

void mcat_report_free(mcat_report* r) { delete r; }

}  // extern "C"
