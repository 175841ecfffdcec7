#include <stdio.h>
#include <string.h>
#include "hopfyb.h"

int main(void) {
    HopfybAlgebra *alg = NULL;
    HopfybPair *pair = NULL;
    HopfybBraiding *r = NULL;
    bool flags[4];
    if (hopfyb_algebra_catalog("s3", &alg) != HOPFYB_STATUS_OK) return 10;
    if (hopfyb_algebra_dim(alg) != 6) return 11;
    if (hopfyb_pair_named("conjugation", alg, NULL, &pair) != HOPFYB_STATUS_OK) return 12;
    if (hopfyb_braiding_build(pair, &r) != HOPFYB_STATUS_OK) return 13;
    if (hopfyb_braiding_check(r, false, NULL) != HOPFYB_STATUS_OK) return 14;
    if (hopfyb_pair_involutivity(pair, flags) != HOPFYB_STATUS_CHECK_FAILED) return 15;
    if (flags[0] || flags[1] || flags[2] || flags[3]) return 16;
    if (hopfyb_algebra_catalog("nope", &alg) != HOPFYB_STATUS_INVALID_INPUT) return 17;
    char *msg = hopfyb_last_error();
    if (msg == NULL || strstr(msg, "nope") == NULL) return 18;
    hopfyb_string_free(msg);
    hopfyb_braiding_free(r);
    hopfyb_pair_free(pair);
    hopfyb_algebra_free(alg);
    puts("ok");
    return 0;
}
