/* Links against libbinomials_ffi and decomposes a small ideal. */
#include <stdio.h>
#include "binomials.h"

int main(void) {
    const char *text =
        "ring X Y Z\n"
        "ideal I\n"
        "X^4*Y^2 - Z^6\n"
        "X^3*Y^2 - Z^5\n"
        "X^2 - Y*Z\n";
    BnIdeal *ideal = NULL;
    if (bn_ideal_parse(text, NULL, &ideal) != BN_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", bn_last_error());
        return 1;
    }
    BnIdealList *parts = NULL;
    if (bn_ideal_cellular_decompose(ideal, &parts) != BN_STATUS_OK) {
        fprintf(stderr, "decomposition failed: %s\n", bn_last_error());
        bn_ideal_free(ideal);
        return 1;
    }
    for (size_t k = 0; k < bn_ideal_list_len(parts); k++) {
        char *gb = NULL;
        bn_ideal_groebner_basis(bn_ideal_list_get(parts, k), "lex", &gb);
        printf("component %zu:\n%s\n", k + 1, gb);
        bn_string_free(gb);
    }
    bn_ideal_list_free(parts);
    bn_ideal_free(ideal);
    return 0;
}
