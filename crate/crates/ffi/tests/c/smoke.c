#include <stdio.h>
#include <string.h>
#include "genfrob.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "check failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    int64_t parts[3] = {10, 15, 21};
    GfTuple *t = NULL;
    GfCases *cases = NULL;
    int64_t g = 0;
    uint64_t sigma = 0;
    enum GfMethod method;

    CHECK(gf_tuple_new(parts, 3, &t) == GF_STATUS_OK);
    CHECK(gf_gen_frobenius(t, 4, GF_STRATEGY_BRUTE, &g, &method) == GF_STATUS_OK);
    CHECK(g == 194 && method == GF_METHOD_BRUTE_FORCE);
    CHECK(gf_cases_detect(t, &cases) == GF_STATUS_OK);
    CHECK(gf_cases_len(cases) == 2);
    CHECK(gf_cases_row(cases, 0, 1, &sigma, &g) == GF_STATUS_OK);
    CHECK(sigma == 4 && g == 194);
    gf_cases_free(cases);
    gf_tuple_free(t);

    int64_t bad[2] = {2, 4};
    CHECK(gf_tuple_new(bad, 2, &t) == GF_STATUS_OK);
    CHECK(gf_gen_frobenius(t, 0, GF_STRATEGY_AUTO, &g, NULL) == GF_STATUS_NOT_COPRIME);
    CHECK(strstr(gf_last_error_message(), "common divisor") != NULL);
    gf_tuple_free(t);

    printf("ok\n");
    return 0;
}
