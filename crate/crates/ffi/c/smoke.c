#include <stdio.h>
#include <stdlib.h>

#include "ipgp.h"

int main(int argc, char **argv) {
    long n = argc > 1 ? strtol(argv[1], NULL, 10) : 5;
    long k = argc > 2 ? strtol(argv[2], NULL, 10) : 2;

    IpgpPoly *p = NULL;
    if (ipgp_independence_polynomial(n, k, &p) != IPGP_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ipgp_last_error());
        return 1;
    }
    char *json = ipgp_poly_to_json(p);
    printf("GP(%ld,%ld) %s\n", n, k, json);
    ipgp_string_free(json);

    IpgpRootReport *r = NULL;
    if (ipgp_find_roots(p, 0, &r) != IPGP_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ipgp_last_error());
        ipgp_poly_free(p);
        return 1;
    }
    for (size_t i = 0; i < ipgp_report_degree(r); i++) {
        IpgpRoot root;
        ipgp_report_root(r, i, &root);
        printf("%+.12f %+.12fi\n", root.re, root.im);
    }
    printf("real roots %zu, real-rooted %s\n", ipgp_report_exact_real_count(r),
           ipgp_report_is_real_rooted(r) ? "yes" : "no");
    ipgp_report_free(r);
    ipgp_poly_free(p);
    return 0;
}
