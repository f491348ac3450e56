#pragma once

#include <string>

#include "tzc/codec.hpp"

namespace tzc {

// Text forms. Extension elements are "[c0,c1,...]" with decimal coordinates,
// x_0 first; points are "inf" or "([...],[...])"; compressed vectors are
// comma-separated decimals.
std::string ext_to_text(const ExtEl& a);
ExtEl ext_from_text(const ExtField& K, const std::string& text);

std::string point_to_text(const PtExt& P);
PtExt point_from_text(const ExtField& K, const std::string& text);

std::string compressed_to_text(const Compressed& c);
Compressed compressed_from_text(const TzParams& P, Variant v, const std::string& text);

// Binary form: one header byte (bits 0-2: n, bit 3: variant S=0/T=1,
// bits 4-7: version, currently 0) followed by n-1 big-endian field elements
// of fixed width ceil(bits(q)/8).
std::vector<unsigned char> compressed_to_bytes(const Compressed& c);
Compressed compressed_from_bytes(const TzParams& P, const std::vector<unsigned char>& bytes);

// Flat key/value JSON parameter file:
//   {"q": "...", "n": 3, "mu": "...", "A": "...", "B": "...",
//    "order_E_Fq": "..."}   (order optional)
struct ParamFile {
  mpz_class q;
  unsigned n = 0;
  std::optional<mpz_class> mu;
  mpz_class A, B;
  std::optional<mpz_class> n1;

  static ParamFile load(const std::string& path);
  void save(const std::string& path) const;

  TzParams build() const;  // validates everything
};

}  // namespace tzc
