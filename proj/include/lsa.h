/*
   Copyright 2026 The lsakit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the lsakit core: opaque handles, status codes, and
 * heap-allocated strings released with lsa_string_free. Every function is
 * safe to call from multiple threads on distinct handles.
 *
 * Status codes double as CLI exit codes:
 *   0 ok, 1 verification failure, 2 input error, 3 undecided, 4 internal. */

#ifndef LSAKIT_C_API_H
#define LSAKIT_C_API_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsa_status {
    LSA_OK = 0,
    LSA_ERR_VERIFY = 1,
    LSA_ERR_INPUT = 2,
    LSA_UNDECIDED = 3,
    LSA_ERR_INTERNAL = 4
} lsa_status;

typedef struct lsa_algebra lsa_algebra;

const char* lsa_version(void);

/* Parse the line-oriented algebra grammar. On failure *err carries a
 * "line:col: message" string. `name` may be NULL. */
lsa_status lsa_algebra_parse(const char* text, const char* name, lsa_algebra** out, char** err);

void lsa_algebra_free(lsa_algebra* a);
void lsa_string_free(char* s);

int lsa_algebra_dim(const lsa_algebra* a);

/* Canonical serialization in the same grammar lsa_algebra_parse accepts. */
lsa_status lsa_serialize(const lsa_algebra* a, char** out, char** err);

/* One-line identity profile ("left-symmetric: yes; (4): yes; ..."). */
lsa_status lsa_check(const lsa_algebra* a, char** out, char** err);

/* Full analysis report; as_json selects the stable JSON schema over plain
 * text. Returns LSA_UNDECIDED when the simplicity search ran out of budget
 * (the report is still produced). */
lsa_status lsa_report(const lsa_algebra* a, int as_json, uint64_t seed, int budget, char** out,
                      char** err);

/* Focused sub-reports. */
lsa_status lsa_radicals(const lsa_algebra* a, char** out, char** err);

/* verdict: 1 simple, 0 not simple, -1 undecided. detail carries the
 * explanation and any witness ideal. */
lsa_status lsa_simple(const lsa_algebra* a, uint64_t seed, int budget, int* verdict, char** out,
                      char** err);

/* Quotient by the two-sided ideal spanned by comma-separated lin-combs
 * (e.g. "e2" or "e1 - e3, e4"); serializes the quotient algebra. */
lsa_status lsa_quotient(const lsa_algebra* a, const char* ideal_spec, char** out, char** err);

/* Run the bundled verification battery (worked-example fixtures, proposition
 * suites, consistency oracles, round trips) and render the report including
 * the claim-coverage matrix. `filter` (may be NULL) selects fixtures/suites
 * by substring. failures/findings may be NULL. */
lsa_status lsa_verify_paper(const char* filter, uint64_t seed, char** out, int* failures,
                            int* findings);

#ifdef __cplusplus
}
#endif

#endif
