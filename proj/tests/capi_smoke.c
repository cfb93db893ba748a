/* Exercises the C interface from C to make sure the header is plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "torusrips/torusrips.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

int main(int argc, char** argv) {
  const char* goldens = argc > 1 ? argv[1] : NULL;
  tr_context* ctx = tr_context_new();
  EXPECT(ctx != NULL);
  EXPECT(strlen(tr_version()) > 0);
  EXPECT(strcmp(tr_status_name(TR_ERR_BUDGET), "budget") == 0);

  /* Complex handles. */
  tr_complex* c = NULL;
  EXPECT(tr_complex_new_torus(ctx, 4, 2, -1, &c) == TR_OK);
  EXPECT(tr_complex_max_dim(c) == 4);
  EXPECT(!tr_complex_truncated(c));
  EXPECT(tr_complex_count(c, 0) == 16);
  uint64_t betti[4] = {0, 0, 0, 0};
  EXPECT(tr_complex_betti(ctx, c, TR_INTEGER, 3, betti) == TR_OK);
  EXPECT(betti[0] == 1 && betti[1] == 0 && betti[2] == 0 && betti[3] == 9);
  tr_complex_free(c);

  EXPECT(tr_complex_new_cycle(ctx, 9, 3, 3, &c) == TR_OK);
  uint64_t cyc[3];
  EXPECT(tr_complex_betti(ctx, c, TR_GF2, 2, cyc) == TR_OK);
  EXPECT(cyc[0] == 1 && cyc[1] == 0 && cyc[2] == 2);
  tr_complex_free(c);

  EXPECT(tr_complex_new_window(ctx, 0, 4, 0, 4, 1, 2, &c) == TR_OK);
  EXPECT(tr_complex_count(c, 0) == 25);
  EXPECT(tr_complex_count(c, 1) == 40);
  tr_complex_free(c);

  /* Errors carry a kind and leave the output untouched. */
  EXPECT(tr_complex_new_torus(ctx, 2, 1, 1, &c) == TR_ERR_VALIDATION);
  EXPECT(strstr(tr_last_error(ctx), "\"validation\"") != NULL);
  EXPECT(tr_context_set_simplex_budget(ctx, 10) == TR_OK);
  EXPECT(tr_complex_new_torus(ctx, 5, 2, 3, &c) == TR_ERR_BUDGET);
  EXPECT(tr_context_set_simplex_budget(ctx, 0) == TR_ERR_VALIDATION);
  EXPECT(tr_context_set_simplex_budget(ctx, 50000000) == TR_OK);

  /* JSON commands. */
  char* out = NULL;
  EXPECT(tr_run(ctx, "betti", "{\"space\":\"torus\",\"n\":5,\"k\":2,\"max_dim\":2}", &out) == TR_OK);
  EXPECT(out != NULL && strstr(out, "\"betti\"") != NULL);
  EXPECT(tr_last_error(ctx)[0] == '\0');
  tr_string_free(out);

  out = NULL;
  EXPECT(tr_run(ctx, "betti", "{\"space\":\"torus\",\"n\":5,\"k\":2,\"max_dim\":4,\"simplex_budget\":50}",
                &out) == TR_ERR_BUDGET);
  EXPECT(out == NULL);
  EXPECT(strstr(tr_last_error(ctx), "\"budget\"") != NULL);

  EXPECT(tr_run(ctx, "betti", "not json", &out) == TR_ERR_VALIDATION);
  EXPECT(tr_run(ctx, "paint", "{}", &out) == TR_ERR_VALIDATION);
  EXPECT(tr_run(ctx, "facets", "{\"space\":\"cycle\",\"n\":8,\"k\":3,\"mode\":\"compare\",\"format\":\"json\"}",
                &out) == TR_OK);
  EXPECT(out != NULL && strstr(out, "\"identical\": true") != NULL);
  tr_string_free(out);

  if (goldens) {
    char request[4096];
    snprintf(request, sizeof request,
             "{\"config\":{\"format\":\"json\"},\"goldens\":\"%s\",\"filter\":{\"n\":4}}", goldens);
    out = NULL;
    EXPECT(tr_run(ctx, "verify-table", request, &out) == TR_OK);
    EXPECT(out != NULL && strstr(out, "\"failed\": 0") != NULL);
    tr_string_free(out);
    EXPECT(tr_run(ctx, "verify-table", "{\"goldens\":\"/nonexistent.json\"}", &out) == TR_ERR_IO);
  }

  tr_context_free(ctx);
  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("C API checks passed\n");
  return EXIT_SUCCESS;
}
