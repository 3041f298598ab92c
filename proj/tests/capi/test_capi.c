/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mcat/mcat.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay != NULL && strstr(hay, needle) != NULL; }

static void words(void) {
  mcat_word* w = NULL;
  size_t bad = 99;
  char* s = NULL;

  EXPECT(mcat_word_parse("DEX", &w, &bad) == MCAT_INVALID_ARGUMENT);
  EXPECT(bad == 2);
  EXPECT(w == NULL);
  EXPECT(contains(mcat_last_error(), "index 2"));

  EXPECT(mcat_word_parse("DEEAE", &w, NULL) == MCAT_OK);
  EXPECT(mcat_word_length(w) == 5);
  EXPECT(mcat_word_count(w, 'E') == 3);
  EXPECT(mcat_word_count(w, 'Z') == -1);
  EXPECT(mcat_word_string(w, &s) == MCAT_OK);
  EXPECT(strcmp(s, "DEEAE") == 0);
  mcat_string_free(s);
  EXPECT(mcat_word_shape_json(w, &s) == MCAT_OK);
  EXPECT(contains(s, "[4,1]"));
  mcat_string_free(s);
  EXPECT(mcat_word_decompose_json(w, &s) == MCAT_OK);
  EXPECT(contains(s, "DEE"));
  mcat_string_free(s);

  EXPECT(mcat_enumerate(w, 0, MCAT_FORMAT_ASCII, &s) == MCAT_OK);
  EXPECT(contains(s, "weight a^4*b^4"));
  mcat_string_free(s);
  EXPECT(mcat_enumerate(w, 1, MCAT_FORMAT_JSON, &s) == MCAT_OK);
  EXPECT(contains(s, "\"count\": 3"));
  mcat_string_free(s);
  EXPECT(mcat_enumerate(w, 0, MCAT_FORMAT_DOT, &s) == MCAT_INVALID_ARGUMENT);

  EXPECT(mcat_det(w, &s) == MCAT_OK);
  EXPECT(contains(s, "\"determinant\""));
  mcat_string_free(s);
  mcat_word_free(w);

  EXPECT(mcat_word_parse(NULL, &w, NULL) == MCAT_INVALID_ARGUMENT);
  mcat_word_free(NULL);
}

static void polynomials(void) {
  mcat_word* w = NULL;
  mcat_poly* p = NULL;
  char* s = NULL;
  EXPECT(mcat_word_parse("DEEAE", &w, NULL) == MCAT_OK);
  EXPECT(mcat_word_weight(w, &p) == MCAT_OK);
  EXPECT(mcat_poly_text(p, &s) == MCAT_OK);
  EXPECT(strcmp(s, "a^4*b^4 + a^3*b^4 + a^2*b^4") == 0);
  mcat_string_free(s);
  EXPECT(mcat_poly_eval(p, "1", "1", NULL, &s) == MCAT_OK);
  EXPECT(strcmp(s, "3") == 0);
  mcat_string_free(s);
  EXPECT(mcat_poly_eval(p, "x", "1", NULL, &s) == MCAT_INVALID_ARGUMENT);
  EXPECT(mcat_poly_json(p, &s) == MCAT_OK);
  EXPECT(contains(s, "\"coeff\""));
  mcat_string_free(s);
  mcat_poly_free(p);
  mcat_word_free(w);

  EXPECT(mcat_partition_function(3, 1, &p) == MCAT_OK);
  EXPECT(mcat_poly_eval(p, "1", "1", "0", &s) == MCAT_OK);
  EXPECT(strcmp(s, "14") == 0);
  mcat_string_free(s);
  mcat_poly_free(p);
  EXPECT(mcat_partition_function(2, 3, &p) == MCAT_INVALID_ARGUMENT);
}

static void chains(void) {
  mcat_params* params = NULL;
  char* s = NULL;
  EXPECT(mcat_params_create("1", "1", "0", &params) == MCAT_OK);
  EXPECT(mcat_stationary(2, 0, params, MCAT_FORMAT_CSV, &s) == MCAT_OK);
  EXPECT(contains(s, "DE,2/5"));
  mcat_string_free(s);
  mcat_params_free(params);
  EXPECT(mcat_params_create("0", "1", "0", &params) == MCAT_INVALID_ARGUMENT);
  EXPECT(mcat_params_create("1/0", "1", "0", &params) == MCAT_INVALID_ARGUMENT);

  EXPECT(mcat_stationary(2, 0, NULL, MCAT_FORMAT_JSON, &s) == MCAT_OK);
  mcat_string_free(s);

  EXPECT(mcat_count_table(3, 1, 1, MCAT_FORMAT_CSV, &s) == MCAT_OK);
  EXPECT(contains(s, "3,1,1,8,8"));
  mcat_string_free(s);
  EXPECT(mcat_count_table(3, -1, 0, MCAT_FORMAT_JSON, &s) == MCAT_OK);
  mcat_string_free(s);

  EXPECT(mcat_tableau_graph(2, 0, MCAT_FORMAT_DOT, &s) == MCAT_OK);
  EXPECT(contains(s, "digraph"));
  mcat_string_free(s);
  EXPECT(mcat_tableau_graph(2, 5, MCAT_FORMAT_CSV, &s) == MCAT_INVALID_ARGUMENT);
}

static void verification(void) {
  mcat_grid* grid = NULL;
  mcat_report* rep = NULL;
  char* s = NULL;

  EXPECT(mcat_grid_parse("1,1;1/2,2", &grid) == MCAT_OK);
  EXPECT(mcat_grid_size(grid) == 2);
  EXPECT(mcat_verify_main_theorem(4, -1, grid, &rep) == MCAT_OK);
  EXPECT(mcat_report_passed(rep) == 1);
  EXPECT(mcat_report_json(rep, &s) == MCAT_OK);
  EXPECT(contains(s, "\"passed\": true"));
  mcat_string_free(s);
  mcat_report_free(rep);
  mcat_grid_free(grid);
  EXPECT(mcat_grid_parse("1,", &grid) == MCAT_INVALID_ARGUMENT);

  grid = mcat_grid_default();
  EXPECT(mcat_grid_size(grid) == 5);
  EXPECT(mcat_verify_balance(3, 1, grid, &rep) == MCAT_OK);
  mcat_report_free(rep);
  EXPECT(mcat_verify_projection(3, -1, grid, &rep) == MCAT_OK);
  mcat_report_free(rep);
  EXPECT(mcat_verify_ansatz(4, &rep) == MCAT_OK);
  mcat_report_free(rep);
  mcat_grid_free(grid);

  mcat_ruleset* rules = mcat_ruleset_default();
  EXPECT(mcat_q1_verify(3, 1, rules, NULL, &rep) == MCAT_OK);
  mcat_report_free(rep);
  EXPECT(mcat_q1_consistency(3, -1, rules, &rep) == MCAT_OK);
  mcat_report_free(rep);
  mcat_ruleset_free(rules);

  /* No q in DE boxes: the q = 1 check must fail and still report. */
  EXPECT(mcat_ruleset_from_json("{\"name\":\"no-q\",\"de\":[\"alpha\",\"beta\"],\"da\":[\"beta_hat\",\"q\"],"
                                "\"ae\":[\"alpha_hat\",\"q\"]}",
                                &rules) == MCAT_OK);
  EXPECT(mcat_q1_verify(2, 0, rules, NULL, &rep) == MCAT_CHECK_FAILED);
  EXPECT(mcat_report_passed(rep) == 0);
  EXPECT(mcat_report_json(rep, &s) == MCAT_OK);
  EXPECT(contains(s, "\"mismatches\""));
  mcat_string_free(s);
  mcat_report_free(rep);
  mcat_ruleset_free(rules);
  EXPECT(mcat_ruleset_from_json("{", &rules) == MCAT_INVALID_ARGUMENT);

  EXPECT(mcat_verify_main_theorem(0, 0, NULL, &rep) == MCAT_INVALID_ARGUMENT);
  EXPECT(mcat_q1_sweep(2, NULL, &rep) == MCAT_OK);
  mcat_report_free(rep);
}

int main(void) {
  EXPECT(strcmp(mcat_version(), "0.1.0") == 0);
  words();
  polynomials();
  chains();
  verification();
  if (failures != 0) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
