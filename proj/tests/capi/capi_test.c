/* Exercises the C API from plain C. */
#include <stdio.h>
#include <string.h>

#include "opcat.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void commands(void) {
  size_t n = opcat_command_count();
  int seen_james = 0;
  EXPECT(n == 12);
  for (size_t i = 0; i < n; ++i) seen_james |= strcmp(opcat_command_name(i), "james") == 0;
  EXPECT(seen_james);
  EXPECT(opcat_command_name(n) == NULL);
  EXPECT(strlen(opcat_version()) > 0);
}

static void run(void) {
  opcat_report* r = NULL;
  EXPECT(opcat_run("check-operad", "{\"operad\": \"assoc\"}", NULL, &r) == OPCAT_OK);
  EXPECT(r && opcat_report_ok(r));
  EXPECT(strstr(opcat_report_json(r, -1), "\"ok\":true") != NULL);
  opcat_report_free(r);

  r = NULL;
  EXPECT(opcat_run("beck-check", "{}", "{\"self_test\": true}", &r) == OPCAT_OK);
  EXPECT(strstr(opcat_report_json(r, -1), "\"monadic\":true") != NULL);
  opcat_report_free(r);

  r = NULL;
  EXPECT(opcat_run("check-operad", "{\"operad\": ", NULL, &r) == OPCAT_ERR_PARSE);
  EXPECT(r == NULL);
  EXPECT(strlen(opcat_last_error()) > 0);
  EXPECT(opcat_run("no-such-command", "{}", NULL, &r) == OPCAT_ERR_PARSE);
  EXPECT(opcat_run("enum-homs", "{\"kind\": \"Sigma\", \"m\": -1, \"n\": 2}", NULL, &r) == OPCAT_ERR_PARSE);
  EXPECT(strstr(opcat_last_error(), "'m'") != NULL);
  EXPECT(opcat_run("james", "{\"space\": {\"model\": \"discrete\", \"points\": 3}}", NULL, &r) == OPCAT_ERR_DOMAIN);
  EXPECT(opcat_run(NULL, "{}", NULL, &r) == OPCAT_ERR_ARGUMENT);
  EXPECT(opcat_run("bar", "{}", NULL, NULL) == OPCAT_ERR_ARGUMENT);

  /* a non-special Pi-object is a result unless special is expected */
  r = NULL;
  EXPECT(opcat_run("segal", "{\"pi_object\": {\"kind\": \"power\", \"size\": 2}, \"expect_special\": false}", NULL, &r) ==
         OPCAT_CHECK_FAILED);
  EXPECT(r && !opcat_report_ok(r));
  opcat_report_free(r);
}

static void operads(void) {
  opcat_operad* op = NULL;
  opcat_report* r = NULL;
  EXPECT(opcat_operad_new("comm", 0, 4, &op) == OPCAT_OK);
  EXPECT(opcat_operad_bound(op) == 4);
  for (size_t j = 0; j <= 4; ++j) EXPECT(opcat_operad_card(op, j) == 1);
  EXPECT(opcat_operad_card(op, 5) == 0);
  EXPECT(opcat_operad_check(op, &r) == OPCAT_OK);
  opcat_report_free(r);
  opcat_operad_free(op);

  EXPECT(opcat_operad_new("assoc", 0, 4, &op) == OPCAT_OK);
  EXPECT(opcat_operad_card(op, 3) == 6 && opcat_operad_card(op, 4) == 24);
  opcat_operad_free(op);

  EXPECT(opcat_operad_new("end", 2, 2, &op) == OPCAT_OK);
  EXPECT(opcat_operad_card(op, 1) == 2 && opcat_operad_card(op, 2) == 8);
  opcat_operad_free(op);

  EXPECT(opcat_operad_new("lie", 0, 3, &op) == OPCAT_ERR_PARSE);
  EXPECT(op == NULL);
}

static void spaces(void) {
  opcat_space* s = NULL;
  size_t ranks[4], torsion[4];
  EXPECT(opcat_space_new("{\"model\": \"sphere\", \"dim\": 2}", 4, &s) == OPCAT_OK);
  EXPECT(opcat_space_levels(s) == 5);
  EXPECT(opcat_space_size(s, 0) == 1);
  EXPECT(opcat_space_homology(s, 3, ranks, torsion) == OPCAT_OK);
  EXPECT(ranks[0] == 1 && ranks[1] == 0 && ranks[2] == 1 && ranks[3] == 0);
  EXPECT(torsion[0] + torsion[1] + torsion[2] + torsion[3] == 0);
  EXPECT(opcat_space_homology(s, 4, ranks, NULL) == OPCAT_ERR_BOUND);
  opcat_space_free(s);
  EXPECT(opcat_space_new("{\"model\": \"torus\"}", 3, &s) == OPCAT_ERR_PARSE);
}

int main(void) {
  commands();
  run();
  operads();
  spaces();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
