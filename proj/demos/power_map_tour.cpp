/*
   Copyright 2026 The ffdyn Authors

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

// Walks through the library on small inputs: an explicit squaring cycle in
// M_2(59), counts of periodic matrices and the limiting proportions.

#include <iostream>

#include <ffdyn/ffdyn.hpp>

using namespace ffdyn;

int main() {
    auto F = make_field(59, 1);
    const Matrix A = Matrix::from_ints(F, 2, {0, 42, 1, 31});
    const auto orbit = orbit_report(A, 2);
    std::cout << "A =\n" << A.to_string() << "\n";
    std::cout << "squaring: preperiod " << orbit.preperiod << ", period " << orbit.period << "\n";
    std::cout << "minimal polynomial " << min_poly(A).to_string() << "\n\n";

    for (std::uint64_t q : {13, 31, 67}) {
        const ExactInt m = exact_periodic_count(Family::kM, 2, q, 3);
        const ExactInt gl = exact_periodic_count(Family::kGL, 2, q, 3);
        std::cout << "q = " << q << ": |Per(x^3, M_2)| = " << m << " (closed form " << m2_closed(q, 3) << "), "
                  << "|Per(x^3, GL_2)| / |GL_2| = " << to_string(ExactRational(gl, gl_order(2, q))) << "\n";
    }
    std::cout << "\nlimits with L = 3, c = 1:\n";
    for (unsigned ell = 1; ell <= 4; ++ell)
        std::cout << "  ell = " << ell << "  GL " << to_string(limit_gl(ell, 3, 1)) << "  Sp/U " << to_string(limit_sp_u(ell, 3, 1)) << "\n";
}
