/* Copyright 2026 The hpcenergy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* The public header must compile as plain C. */
#include <math.h>
#include <stdio.h>

#include "hpcenergy/hpcenergy.h"

int main(void) {
  hpce_model* m = NULL;
  hpce_breakdown* b = NULL;
  double kw = 0.0;
  if (hpce_model_reference_archer2(&m) != HPCE_OK) return 1;
  if (hpce_system_power(m, 0.0, &b) != HPCE_OK) return 1;
  hpce_breakdown_total(b, &kw);
  hpce_breakdown_free(b);
  hpce_model_free(m);
  if (fabs(kw - 1800.0) > 1e-9) {
    fprintf(stderr, "idle total %f\n", kw);
    return 1;
  }
  puts("ok");
  return 0;
}
