#include <stdio.h>
#include <string.h>

#include "chebyshev_expansions.h"

#define CHECK(cond)                                                    \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,    \
                    #cond, cheb_last_error());                         \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    ChebPoly *t4 = NULL;
    char *s = NULL;
    int64_t deg = 0;

    CHECK(cheb_poly_new("chebyshev-t", 4, &t4) == CHEB_STATUS_OK);
    CHECK(cheb_poly_degree(t4, &deg) == CHEB_STATUS_OK && deg == 4);
    CHECK(cheb_poly_to_string(t4, &s) == CHEB_STATUS_OK);
    CHECK(strcmp(s, "8*x^4 - 8*x^2 + 1") == 0);
    cheb_string_free(s);
    cheb_poly_free(t4);

    ChebExpansion *e = NULL;
    size_t len = 0;
    CHECK(cheb_expansion_new("bernoulli", "T", 3, CHEB_SOURCE_CROSS_VALIDATED, &e) == CHEB_STATUS_OK);
    CHECK(cheb_expansion_len(e, &len) == CHEB_STATUS_OK && len == 4);
    CHECK(cheb_expansion_coefficient(e, 0, &s) == CHEB_STATUS_OK);
    CHECK(strcmp(s, "-3/4") == 0);
    cheb_string_free(s);
    CHECK(cheb_expansion_coefficient(e, 4, &s) == CHEB_STATUS_OUT_OF_RANGE);
    CHECK(cheb_expansion_to_json(e, &s) == CHEB_STATUS_OK);
    puts(s);
    cheb_string_free(s);
    cheb_expansion_free(e);

    CHECK(cheb_moment(1, "plus", 0, &s) == CHEB_STATUS_OK);
    CHECK(strcmp(s, "(3/8)*pi") == 0);
    cheb_string_free(s);

    size_t passed = 0, total = 0;
    CHECK(cheb_verify("orthogonality-U", 12, &passed, &total, NULL) == CHEB_STATUS_OK);
    CHECK(passed == 169 && total == 169);

    CHECK(cheb_poly_new("legendre", 2, &t4) == CHEB_STATUS_INVALID_ARGUMENT);
    CHECK(strlen(cheb_last_error()) > 0);
    CHECK(cheb_poly_new(NULL, 2, &t4) == CHEB_STATUS_NULL_POINTER);
    CHECK(cheb_poly_new("hermite", CHEB_MAX_DEGREE + 1, &t4) == CHEB_STATUS_OUT_OF_RANGE);
    return 0;
}
