/*
   Copyright 2026 The rootless Authors

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

#include "doctest.h"
#include "rootless/checks.hpp"
#include "rootless/errors.hpp"

using namespace rootless;

TEST_CASE("report format") {
  Report r;
  r.command = "demo";
  r.param("bound", "10");
  r.verdict("count", "3");
  r.timing("total", 1.25);
  r.trace("t", "line one");
  CHECK(r.to_string() == "command=demo\nparam.bound=10\ncount=3\nstatus=pass\nbegin trace t\nline one\nend trace\n");
  CHECK(r.to_string(true).find("time.total=1.250\n") != std::string::npos);
  CHECK(exit_code(r) == 0);

  Report inner;
  inner.violation("missing", "7");
  r.merge("sub", inner);
  CHECK_FALSE(r.passed);
  CHECK(exit_code(r) == 1);
  CHECK(r.to_string().find("sub.missing=7\nsub.status=fail\nstatus=fail\n") != std::string::npos);
}

TEST_CASE("checks pass and their negative controls fail") {
  CheckOptions neg;
  neg.negative_control = true;
  CHECK(verify_ff(3, 16).passed);
  CHECK_FALSE(verify_ff(3, 16, neg).passed);
  CHECK(check_hilbert_reciprocity(8).passed);
  CHECK_FALSE(check_hilbert_reciprocity(8, neg).passed);
  CHECK(check_norm_trace(10).passed);
  CHECK_FALSE(check_norm_trace(10, neg).passed);
  CHECK(check_local_global_soundness(3, 2).passed);
  CHECK_FALSE(check_local_global_soundness(3, 2, neg).passed);
  CHECK(check_oracle_equivalence(5).passed);
  CHECK_FALSE(check_oracle_equivalence(5, neg).passed);
  CHECK(check_chebotarev(10000).passed);
  CHECK_FALSE(check_chebotarev(10000, neg).passed);
  CHECK_THROWS_AS(verify_ff(1, 16), InvalidInput);
}

TEST_CASE("reports are deterministic") {
  CheckOptions opt;
  opt.seed = 4;
  CHECK(check_norm_trace(5, opt).to_string() == check_norm_trace(5, opt).to_string());
  CHECK(check_oracle_equivalence(5, opt).to_string() == check_oracle_equivalence(5, opt).to_string());
  CHECK(acceptance_checks().size() == 10);
}
