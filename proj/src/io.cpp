#include "tzc/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tzc {

namespace {

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trimmed(item));
  return out;
}

mpz_class parse_mpz(const std::string& s) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InvalidInput("not a decimal integer: " + s);
  return v;
}

}  // namespace

std::string ext_to_text(const ExtEl& a) { return a.str(); }

ExtEl ext_from_text(const ExtField& K, const std::string& text) {
  std::string s = trimmed(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InvalidInput("extension element must look like [c0,c1,...]: " + text);
  auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != K.degree())
    throw InvalidInput("expected " + std::to_string(K.degree()) + " coordinates");
  std::vector<Fp> coords;
  for (const auto& p : parts) coords.push_back(K.base().make(parse_mpz(p)));
  return K.from_coords(coords);
}

std::string point_to_text(const PtExt& P) {
  if (P.inf) return "inf";
  return "(" + P.x.str() + "," + P.y.str() + ")";
}

PtExt point_from_text(const ExtField& K, const std::string& text) {
  std::string s = trimmed(text);
  if (s == "inf") return PtExt::infinity(K.zero());
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InvalidInput("point must be \"inf\" or \"([...],[...])\": " + text);
  std::string inner = s.substr(1, s.size() - 2);
  size_t sep = inner.find("],");
  if (sep == std::string::npos) throw InvalidInput("malformed point: " + text);
  return PtExt::affine(ext_from_text(K, inner.substr(0, sep + 1)),
                       ext_from_text(K, inner.substr(sep + 2)));
}

std::string compressed_to_text(const Compressed& c) {
  std::string s;
  for (const auto& v : c.coords) {
    if (!s.empty()) s += ",";
    s += v.str();
  }
  return s;
}

Compressed compressed_from_text(const TzParams& P, Variant v, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != P.n() - 1)
    throw InvalidInput("expected " + std::to_string(P.n() - 1) + " coordinates");
  Compressed c;
  c.variant = v;
  c.n = P.n();
  for (const auto& p : parts) c.coords.push_back(P.F().make(parse_mpz(p)));
  return c;
}

std::vector<unsigned char> compressed_to_bytes(const Compressed& c) {
  std::vector<unsigned char> out;
  unsigned char header = static_cast<unsigned char>(c.n & 0x7);
  if (c.variant == Variant::T) header |= 0x8;
  out.push_back(header);
  for (const auto& v : c.coords) v.to_bytes(out);
  return out;
}

Compressed compressed_from_bytes(const TzParams& P, const std::vector<unsigned char>& bytes) {
  if (bytes.empty()) throw InvalidInput("empty compressed encoding");
  unsigned char header = bytes[0];
  if ((header >> 4) != 0) throw InvalidInput("unsupported compressed encoding version");
  unsigned n = header & 0x7;
  if (n != P.n()) throw InvalidInput("compressed point has the wrong extension degree");
  Compressed c;
  c.variant = (header & 0x8) ? Variant::T : Variant::S;
  c.n = n;
  size_t w = P.F().byte_length();
  if (bytes.size() != 1 + (n - 1) * w) throw InvalidInput("compressed encoding has the wrong length");
  for (unsigned i = 0; i + 1 < n; ++i)
    c.coords.push_back(Fp::from_bytes(P.F(), bytes.data() + 1 + i * w, w));
  return c;
}

ParamFile ParamFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open parameter file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("malformed parameter file: " + std::string(e.what()));
  }
  ParamFile p;
  try {
    p.q = parse_mpz(j.at("q").get<std::string>());
    p.n = j.at("n").get<unsigned>();
    p.A = parse_mpz(j.at("A").get<std::string>());
    p.B = parse_mpz(j.at("B").get<std::string>());
    if (j.contains("mu")) p.mu = parse_mpz(j.at("mu").get<std::string>());
    if (j.contains("order_E_Fq")) p.n1 = parse_mpz(j.at("order_E_Fq").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("parameter file is missing fields: " + std::string(e.what()));
  }
  return p;
}

void ParamFile::save(const std::string& path) const {
  nlohmann::json j;
  j["q"] = q.get_str();
  j["n"] = n;
  if (mu.has_value()) j["mu"] = mu->get_str();
  j["A"] = A.get_str();
  j["B"] = B.get_str();
  if (n1.has_value()) j["order_E_Fq"] = n1->get_str();
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write parameter file: " + path);
  out << j.dump(2) << "\n";
}

TzParams ParamFile::build() const { return TzParams::create(q, n, A, B, mu, n1); }

}  // namespace tzc
