#pragma once

#include "tzc/unipoly.hpp"

namespace tzc {

UniPoly<ExtEl> lift_to_ext(const UniPoly<Fp>& f, const ExtField& K);

// All roots of f (coefficients in F_q) lying in F_{q^n}. Same contract as
// roots_in_field(lift_to_ext(f, K)) but much faster: the distinct-degree
// part runs entirely over F_q via Frobenius composition, and the splitting
// of an irreducible degree-n factor uses x^(q^i) semilinear maps instead of
// a q^n-sized exponentiation. This is the decompression workhorse.
std::vector<ExtEl> roots_in_ext(const UniPoly<Fp>& f, const ExtField& K);

}  // namespace tzc
