// tzc: point compression for trace zero subgroups of elliptic curves over
// F_{q^n}, n = 3 or 5.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tzc/bench.hpp"
#include "tzc/io.hpp"
#include "tzc/selftest.hpp"

using namespace tzc;

namespace {

Variant parse_variant(const std::string& s) {
  if (s == "s" || s == "S") return Variant::S;
  if (s == "t" || s == "T") return Variant::T;
  throw InvalidInput("variant must be s or t");
}

void write_file(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::vector<unsigned char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  return std::vector<unsigned char>(std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>());
}

struct SetupArgs {
  std::string q, A, B, mu, order, out;
  unsigned n = 3;
  bool count_order = false;
};

int cmd_setup(const SetupArgs& a) {
  ParamFile pf;
  pf.q = mpz_class(a.q);
  pf.n = a.n;
  pf.A = mpz_class(a.A);
  pf.B = mpz_class(a.B);
  if (!a.mu.empty()) pf.mu = mpz_class(a.mu);
  if (!a.order.empty()) pf.n1 = mpz_class(a.order);

  if (a.count_order && !pf.n1.has_value()) {
    // determine |E(F_q)| before the full build so it lands in the file
    PrimeField F(pf.q);
    CurveFp c{F.make(pf.A), F.make(pf.B)};
    if (pf.q <= 1000000) {
      pf.n1 = count_points_exhaustive(F, c);
    } else {
      Rng rng(1);
      std::cerr << "counting |E(F_q)| by baby-step giant-step...\n";
      pf.n1 = count_points_bsgs(F, c, rng);
    }
  }

  TzParams P = pf.build();
  pf.mu = P.mu().value();  // record the selected mu
  if (!pf.n1.has_value() && P.orders().has_value()) pf.n1 = P.orders()->n1;
  pf.save(a.out);

  std::cout << "q  = " << pf.q << " (" << P.F().bit_length() << " bits)\n";
  std::cout << "n  = " << pf.n << "\nmu = " << P.mu() << "\n";
  std::cout << "E: y^2 = x^3 + " << P.curve().A << "*x + " << P.curve().B << "\n";
  if (P.n() == 5) std::cout << "exceptional x-coordinates: " << P.exceptional().size() << "\n";
  if (P.orders().has_value()) {
    const auto& o = *P.orders();
    std::cout << "|E(F_q)|   = " << o.n1 << "\n";
    std::cout << "|E(F_q^n)| = " << o.nn << "\n";
    std::cout << "|T_n|      = " << o.tn << " ("
              << mpz_sizeinbase(o.tn.get_mpz_t(), 2) << " bits, "
              << (is_probable_prime(o.tn) ? "prime" : "composite") << ")\n";
  }
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

struct CompressArgs {
  std::string params, point, x, variant = "s", binary_out;
  bool random = false, no_check = false;
  uint64_t seed = 2;
};

int cmd_compress(const CompressArgs& a) {
  TzParams P = ParamFile::load(a.params).build();
  Variant v = parse_variant(a.variant);
  PtExt pt = PtExt::infinity(P.K().zero());
  if (a.random) {
    Rng rng(a.seed);
    pt = random_trace_zero_point(P, rng);
    std::cout << "point: " << point_to_text(pt) << "\n";
  } else if (!a.x.empty()) {
    auto lifted = lift_x(P.curve_ext(), ext_from_text(P.K(), a.x));
    if (!lifted.has_value()) throw InvalidInput("x-coordinate is not on the curve");
    pt = lifted->first;
  } else if (!a.point.empty()) {
    pt = point_from_text(P.K(), a.point);
  } else {
    throw InvalidInput("need --point, --x or --random");
  }
  Compressed c = compress(P, pt, v, !a.no_check);
  std::cout << compressed_to_text(c) << "\n";
  if (!a.binary_out.empty()) write_file(a.binary_out, compressed_to_bytes(c));
  return 0;
}

struct DecompressArgs {
  std::string params, input, binary_in, variant = "s";
};

int cmd_decompress(const DecompressArgs& a) {
  TzParams P = ParamFile::load(a.params).build();
  Compressed c;
  if (!a.binary_in.empty())
    c = compressed_from_bytes(P, read_file(a.binary_in));
  else if (!a.input.empty())
    c = compressed_from_text(P, parse_variant(a.variant), a.input);
  else
    throw InvalidInput("need --input or --binary");
  auto classes = decompress(P, c);
  std::cout << "classes: " << classes.size() << "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    std::cout << "class " << i + 1 << " (canonical "
              << point_to_text(classes[i].canonical()) << "):\n";
    for (const auto& x : classes[i].x_coords()) std::cout << "  x = " << ext_to_text(x) << "\n";
  }
  return 0;
}

struct BenchArgs {
  std::string params, variant = "both", op = "both";
  size_t points = 1000;
  uint64_t seed = 3;
  bool check = false;
};

int cmd_bench(const BenchArgs& a) {
  TzParams P = ParamFile::load(a.params).build();
  std::vector<Variant> variants;
  if (a.variant == "both") {
    variants = {Variant::S, Variant::T};
  } else {
    variants = {parse_variant(a.variant)};
  }
  std::vector<BenchLine> lines;
  if (a.op == "compress" || a.op == "both")
    for (Variant v : variants) lines.push_back(bench_compress(P, v, a.points, a.seed, a.check));
  if (a.op == "decompress" || a.op == "both")
    for (Variant v : variants) lines.push_back(bench_decompress(P, v, a.points, a.seed));
  if (lines.empty()) throw InvalidInput("op must be compress, decompress or both");
  print_bench_table(lines, std::cout);
  return 0;
}

struct SelftestArgs {
  std::string params, q, A = "1", B = "1", mu;
  unsigned n = 3;
  unsigned bound = 31;
  uint64_t seed = 4;
};

int cmd_selftest(const SelftestArgs& a) {
  ParamFile pf;
  if (!a.params.empty()) {
    pf = ParamFile::load(a.params);
  } else {
    if (a.q.empty()) throw InvalidInput("need --params or --q/--n/--A/--B");
    pf.q = mpz_class(a.q);
    pf.n = a.n;
    pf.A = mpz_class(a.A);
    pf.B = mpz_class(a.B);
    if (!a.mu.empty()) pf.mu = mpz_class(a.mu);
  }
  auto results = run_selftest(pf, a.seed, a.bound);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    all = all && r.pass;
  }
  if (!all) throw InternalError("selftest found a broken invariant");
  return 0;
}

struct DumpArgs {
  std::string params, which = "all";
};

int cmd_dump(const DumpArgs& a) {
  TzParams P = ParamFile::load(a.params).build();
  unsigned n = P.n();
  std::vector<std::string> svars, xvars;
  for (unsigned i = 1; i <= n; ++i) svars.push_back("s" + std::to_string(i));
  for (unsigned i = 0; i < n; ++i) xvars.push_back("x" + std::to_string(i));
  bool all = a.which == "all";
  if (all || a.which == "f") {
    MultiPoly f = summation_polynomial(n, P.curve().A, P.curve().B);
    std::cout << "f_" << n << " = " << f.str("z") << "\n";
  }
  if (all || a.which == "g") std::cout << "g_" << n << " = " << P.g().str(svars) << "\n";
  if (all || a.which == "etilde")
    for (unsigned i = 0; i < n; ++i)
      std::cout << "e~_" << i + 1 << " = " << P.etilde()[i].str(xvars) << "\n";
  if ((all && n == 3) || a.which == "wr3") {
    MultiPoly wr = weil_restrict_f3(P.curve().A, P.curve().B, P.K());
    std::cout << "f~_3 = " << wr.str(xvars) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal-size point compression for trace zero subgroups"};
  app.require_subcommand(1);

  SetupArgs sa;
  auto* setup = app.add_subcommand("setup", "validate parameters and write a parameter file");
  setup->add_option("--q", sa.q, "field characteristic (odd prime > 3)")->required();
  setup->add_option("--n", sa.n, "extension degree (3 or 5)")->required();
  setup->add_option("--A", sa.A, "curve coefficient A")->required();
  setup->add_option("--B", sa.B, "curve coefficient B")->required();
  setup->add_option("--mu", sa.mu, "Kummer constant (default: smallest non-n-th power)");
  setup->add_option("--order-Fq", sa.order, "externally supplied |E(F_q)|");
  setup->add_flag("--count-order", sa.count_order, "determine |E(F_q)| (exhaustive or BSGS)");
  setup->add_option("-o,--out", sa.out, "output parameter file")->required();

  CompressArgs ca;
  auto* comp = app.add_subcommand("compress", "compress a trace zero point");
  comp->add_option("-p,--params", ca.params, "parameter file")->required();
  comp->add_option("--point", ca.point, "point as ([x0,...],[y0,...])");
  comp->add_option("--x", ca.x, "x-coordinate as [x0,...]; y is recovered");
  comp->add_flag("--random", ca.random, "sample and compress a random trace zero point");
  comp->add_option("--seed", ca.seed, "sampling seed for --random");
  comp->add_option("--variant", ca.variant, "coordinate variant: s or t");
  comp->add_flag("--no-check", ca.no_check, "skip the trace zero membership check");
  comp->add_option("--binary", ca.binary_out, "also write the binary encoding to this file");

  DecompressArgs da;
  auto* dec = app.add_subcommand("decompress", "recover the point classes of a compressed vector");
  dec->add_option("-p,--params", da.params, "parameter file")->required();
  dec->add_option("--input", da.input, "compressed vector: comma-separated decimals");
  dec->add_option("--variant", da.variant, "coordinate variant: s or t");
  dec->add_option("--binary", da.binary_in, "read the binary encoding from this file");

  BenchArgs ba;
  auto* ben = app.add_subcommand("bench", "time compression and decompression");
  ben->add_option("-p,--params", ba.params, "parameter file")->required();
  ben->add_option("--points", ba.points, "number of sampled points");
  ben->add_option("--variant", ba.variant, "s, t or both");
  ben->add_option("--op", ba.op, "compress, decompress or both");
  ben->add_option("--seed", ba.seed, "sampling seed");
  ben->add_flag("--check", ba.check, "include the membership check in compression timing");

  SelftestArgs ta;
  auto* self = app.add_subcommand("selftest", "run the exhaustive small-field oracle suite");
  self->add_option("-p,--params", ta.params, "parameter file");
  self->add_option("--q", ta.q, "field characteristic (at most 100)");
  self->add_option("--n", ta.n, "extension degree");
  self->add_option("--A", ta.A, "curve coefficient A");
  self->add_option("--B", ta.B, "curve coefficient B");
  self->add_option("--mu", ta.mu, "Kummer constant");
  self->add_option("--seed", ta.seed, "oracle sampling seed");
  self->add_option("--bound", ta.bound, "largest q accepted (exhaustive sweeps grow fast)");

  DumpArgs du;
  auto* dump = app.add_subcommand("dump-equations", "print the symbolic equations");
  dump->add_option("-p,--params", du.params, "parameter file")->required();
  dump->add_option("--which", du.which, "f, g, etilde, wr3 or all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*setup) return cmd_setup(sa);
    if (*comp) return cmd_compress(ca);
    if (*dec) return cmd_decompress(da);
    if (*ben) return cmd_bench(ba);
    if (*self) return cmd_selftest(ta);
    if (*dump) return cmd_dump(du);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
