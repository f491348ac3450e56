// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exit code 0 iff all pass.

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "golden.hpp"
#include "tzc/bench.hpp"
#include "tzc/io.hpp"

using namespace tzc;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// minimal worker pool over an index range; rethrows the first failure
void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  std::mutex err_mutex;
  std::string error;
  auto body = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (error.empty()) error = e.what();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (!error.empty()) throw InternalError(error);
}

struct Failure : std::runtime_error {
  explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

const mpz_class kQ79 = (mpz_class(1) << 79) - 67;
const mpz_class kQ60n5 = (mpz_class(1) << 60) - 695;
const mpz_class kQ60n3 = (mpz_class(1) << 60) - 93;
const mpz_class kQ50 = (mpz_class(1) << 50) - 113;
const mpz_class kQ40 = (mpz_class(1) << 40) - 195;

std::set<std::string> x_set(const PointClass& cls) {
  std::set<std::string> out;
  for (const auto& x : cls.x_coords()) out.insert(x.str());
  return out;
}

PtExt lift_point(const TzParams& P, std::initializer_list<const char*> coords) {
  std::vector<Fp> c;
  for (const char* d : coords) c.push_back(P.F().parse(d));
  auto lifted = lift_x(P.curve_ext(), P.K().from_coords(c));
  require(lifted.has_value(), "published x-coordinate is not on the curve");
  return lifted->first;
}

// ---------------------------------------------------------------- criterion 1

std::string criterion1() {
  auto t0 = Clock::now();
  TzParams P = TzParams::create(kQ79, 3, 1, 368, 3);
  PtExt pt = lift_point(P, {"260970034280824124824722", "431820813779055023676698",
                            "496444425404915392572065"});
  require(in_trace_zero(P.curve_ext(), pt), "published point is not trace zero");

  Compressed cs = compress(P, pt, Variant::S);
  require(compressed_to_text(cs) == "178447193035157787121145,159414355696879147312583",
          "s-variant vector mismatch: " + compressed_to_text(cs));
  Compressed ct = compress(P, pt, Variant::T);
  require(compressed_to_text(ct) == "260970034280824124824722,492721032528256431308437",
          "t-variant vector mismatch: " + compressed_to_text(ct));

  auto classes = decompress(P, cs);
  require(classes.size() == 1, "expected a single class");
  // the third conjugate is printed with a dropped leading digit; the value
  // below is forced by sum(conjugate coordinates) = 0 for each zeta power
  std::set<std::string> want{
      "[260970034280824124824722,431820813779055023676698,496444425404915392572065]",
      "[260970034280824124824722,318397306102476549147695,124410673032925784958936]",
      "[260970034280824124824722,458707699733097601881649,588070721176787997175041]"};
  require(x_set(classes[0]) == want, "conjugate x-coordinates mismatch");
  auto classes_t = decompress(P, ct);
  require(classes_t.size() == 1 && classes_t[0].same_class(classes[0]),
          "t-variant decompression disagrees");

  double el = secs_since(t0);
  require(el < 1.0, "runtime budget exceeded: " + std::to_string(el) + " s");
  std::ostringstream os;
  os << "both vectors bit-exact, one class, " << std::fixed << std::setprecision(2) << el << " s";
  return os.str();
}

// ---------------------------------------------------------------- criterion 2

std::string criterion2() {
  auto t0 = Clock::now();
  TzParams P = TzParams::create(kQ60n5, 5, 1, 135, 3);  // includes g_5 construction
  PtExt pt = lift_point(P, {"697340666673436518", "801324486821916366", "191523769921581598",
                            "193574581008452232", "808272437423069772"});
  require(in_trace_zero(P.curve_ext(), pt), "published point is not trace zero");

  Compressed cs = compress(P, pt, Variant::S);
  require(compressed_to_text(cs) ==
              "27938819546643747,599177118073319826,587362643323803394,899440023033601132",
          "s-variant vector mismatch: " + compressed_to_text(cs));
  Compressed ct = compress(P, pt, Variant::T);
  require(compressed_to_text(ct) ==
              "697340666673436518,553115374027544004,315951679773440541,285024754797056479",
          "t-variant vector mismatch: " + compressed_to_text(ct));

  auto classes = decompress(P, cs);
  require(classes.size() == 1, "expected a single class, got " + std::to_string(classes.size()));
  std::set<std::string> want{
      "[697340666673436518,801324486821916366,191523769921581598,193574581008452232,"
      "808272437423069772]",
      "[697340666673436518,836712212802745328,506907366758395901,517000572714098077,"
      "268866625974497959]",
      "[697340666673436518,960543166171367987,126552294958642222,448251978051599093,"
      "74315924307841334]",
      "[697340666673436518,810370833605859760,539948230971075773,1032750511909194579,"
      "944608723064092684]",
      "[697340666673436518,49813814418649402,940911346603997068,114265365530348581,"
      "209779298444190813]"};
  require(x_set(classes[0]) == want, "conjugate x-coordinates mismatch");
  auto classes_t = decompress(P, ct);
  require(classes_t.size() == 1 && classes_t[0].same_class(classes[0]),
          "t-variant decompression disagrees");

  PtExt pt2 = lift_point(P, {"760010909342414570", "568064535058825884", "244006548504894796",
                             "446522043528586762", "731314735984238952"});
  require(in_trace_zero(P.curve_ext(), pt2), "second published point is not trace zero");
  auto classes2 = decompress(P, compress(P, pt2, Variant::S));
  require(classes2.size() == 3,
          "expected three classes, got " + std::to_string(classes2.size()));
  bool found = false;
  for (const auto& c : classes2) found = found || classes_equal(P, c.canonical(), pt2);
  require(found, "second point's class missing from its decompression");

  double el = secs_since(t0);
  require(el < 10.0, "runtime budget exceeded: " + std::to_string(el) + " s");
  std::ostringstream os;
  os << "vectors bit-exact, 1 and 3 classes, " << std::fixed << std::setprecision(2) << el
     << " s incl. g_5";
  return os.str();
}

// ---------------------------------------------------------------- criterion 3

std::string criterion3() {
  // n = 3 golden forms at the 79-bit parameters
  {
    TzParams P = TzParams::create(kQ79, 3, 1, 368, 3);
    const PrimeField& F = P.F();
    require(P.g() == golden::g3(F, P.curve().A, P.curve().B), "g_3 differs from the printed form");
    MultiPoly wr = weil_restrict_f3(P.curve().A, P.curve().B, P.K());
    require(wr == golden::wr_f3(F, P.curve().A, P.curve().B, P.mu()),
            "the Weil restriction differs from the printed equation");
    auto want = golden::sys3(F, P.mu());
    for (unsigned i = 0; i < 3; ++i)
      require(P.etilde()[i] == want[i], "restricted symmetric function mismatch at n=3");
  }
  // n = 5 golden forms and the degree profile at the 60-bit parameters
  {
    TzParams P = TzParams::create(kQ60n5, 5, 1, 135, 3);
    auto want = golden::s_list_n5(P.F(), P.mu());
    for (unsigned i = 0; i < 5; ++i)
      require(P.etilde()[i] == want[i], "restricted symmetric function mismatch at n=5");
    require(P.g().total_degree() == 8, "g_5 total degree is not 8");
    unsigned want_deg[5] = {6, 8, 6, 8, 6};
    for (unsigned v = 0; v < 5; ++v)
      require(P.g().degree_in(v) == want_deg[v], "g_5 per-variable degree profile mismatch");
  }
  return "g_3, f~_3, both symmetric-function systems term-exact; g_5 degrees (6,8,6,8,6)";
}

// ---------------------------------------------------------------- criterion 4

struct SmallField {
  long q;
  unsigned n;
  long A, B;
};

std::string criterion4() {
  auto t0 = Clock::now();
  const SmallField fields[] = {
      {7, 3, 1, 1}, {13, 3, 1, 1}, {31, 3, 1, 2}, {11, 5, 1, 1}, {31, 5, 1, 2}};
  size_t total_classes = 0, total_degenerate = 0;
  for (const auto& fld : fields) {
    TzParams P = TzParams::create(fld.q, fld.n, fld.A, fld.B);
    Rng rng(fld.q * 1000 + fld.n);
    TraceZeroEnumeration tz = enumerate_trace_zero(P, rng);

    // (d) the exact sequence at desk scale
    const GroupOrders& o = *P.orders();
    require(o.tn * o.n1 == o.nn, "order product violated");
    require(mpz_class(tz.point_count) == o.tn, "enumeration disagrees with the trace recurrence");

    // (a) + (b): roundtrip over every class, both variants
    std::atomic<size_t> degenerate{0};
    parallel_for(tz.class_reps.size(), [&](size_t i) {
      const PtExt& rep = tz.class_reps[i];
      PointClass cls = class_of(P, rep);
      for (Variant v : {Variant::S, Variant::T}) {
        Compressed c = compress(P, rep, v, false);
        for (const auto& m : cls.members)
          require(compress(P, m, v, false).coords == c.coords,
                  "class members compress differently");
        try {
          auto classes = decompress(P, c);
          bool found = false;
          for (const auto& out : classes) found = found || out.same_class(cls);
          require(found, "roundtrip lost a class at q=" + std::to_string(fld.q));
          if (P.n() == 3 && v == Variant::S && !c.coords[0].is_zero())
            require(classes.size() == 1, "n=3 recovery not unique with s1 != 0");
        } catch (const DegenerateInput&) {
          degenerate.fetch_add(1);
          if (P.n() == 3)
            require(c.coords[0].is_zero(), "degenerate n=3 input with s1 != 0");
        }
      }
    });
    total_classes += tz.class_reps.size();
    total_degenerate += degenerate.load();

    // (c) solution-set equalities
    if (fld.n == 3) {
      MultiPoly wr = weil_restrict_f3(P.curve().A, P.curve().B, P.K());
      auto pts = enumerate_ext_points(P.curve(), P.K());
      parallel_for(pts.size(), [&](size_t i) {
        const PtExt& pt = pts[i];
        if (pt.inf) return;
        Fp v = summation_at_conjugates(P, pt.x);
        std::vector<Fp> coords{pt.x.coord(0), pt.x.coord(1), pt.x.coord(2)};
        require(wr.eval(coords) == v, "Weil restriction disagrees with g(s)");
        require(in_trace_zero(P.curve_ext(), pt) == v.is_zero(),
                "n=3 solution set mismatch at q=" + std::to_string(fld.q));
      });
    } else {
      const auto& L = P.exceptional();
      auto in_L = [&](const ExtEl& x) {
        auto it = std::lower_bound(
            L.begin(), L.end(), x, [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
        return it != L.end() && *it == x;
      };
      if (fld.q == 11) {
        auto pts = enumerate_ext_points(P.curve(), P.K());
        parallel_for(pts.size(), [&](size_t i) {
          const PtExt& pt = pts[i];
          if (pt.inf) return;
          bool vanish = summation_at_conjugates(P, pt.x).is_zero();
          bool lhs = in_trace_zero(P.curve_ext(), pt) || in_L(pt.x);
          require(vanish == lhs, "n=5 solution set mismatch at q=11");
        });
      } else {
        // containment over the whole subgroup, sampled converse
        parallel_for(tz.class_reps.size(), [&](size_t i) {
          require(summation_at_conjugates(P, tz.class_reps[i].x).is_zero(),
                  "trace zero point missed by the summation equation");
        });
        for (const auto& x : L)
          require(summation_at_conjugates(P, x).is_zero(), "exceptional x missed");
        parallel_for(100000, [&](size_t i) {
          Rng local(i * 2654435761u + 17);
          auto lifted = lift_x(P.curve_ext(), random_ext(P.K(), local));
          if (!lifted.has_value()) return;
          const PtExt& pt = lifted->first;
          bool vanish = summation_at_conjugates(P, pt.x).is_zero();
          bool lhs = in_trace_zero(P.curve_ext(), pt) || in_L(pt.x);
          require(vanish == lhs, "n=5 sampled solution-set mismatch at q=31");
        });
      }
    }
  }

  // (c) continued: on a curve where the exceptional set is nonempty, its
  // points satisfy the equation, are not trace zero, and never reach the
  // decompression output
  {
    bool found_curve = false;
    for (long b = 1; b < 11 && !found_curve; ++b) {
      if ((4 + 27 * b * b) % 11 == 0) continue;
      TzParams P = TzParams::create(11, 5, 1, b, 2);
      if (P.exceptional().empty()) continue;
      found_curve = true;
      for (const ExtEl& x : P.exceptional()) {
        require(summation_at_conjugates(P, x).is_zero(), "exceptional x misses the equation");
        auto lifted = lift_x(P.curve_ext(), x);
        require(lifted.has_value(), "exceptional x is not a curve point");
        require(!in_trace_zero(P.curve_ext(), lifted->first),
                "exceptional point must not be trace zero");
      }
      const ExtEl& xL = P.exceptional().front();
      Compressed c{Variant::S, 5, s_values(P, xL)};
      DecompressStats stats;
      auto classes = decompress(P, c, &stats);
      require(stats.exceptional_rejects > 0, "exceptional candidate was never produced");
      for (const auto& out : classes)
        for (const auto& m : out.members)
          require(!(m.x == xL), "exceptional point leaked into the output");
    }
    require(found_curve, "no q=11 curve with a nonempty exceptional set");
  }

  double el = secs_since(t0);
  require(el < 300.0, "runtime budget exceeded: " + std::to_string(el) + " s");
  std::ostringstream os;
  os << total_classes << " classes round-tripped (" << total_degenerate
     << " degenerate), 5 fields, " << std::fixed << std::setprecision(0) << el << " s";
  return os.str();
}

// ---------------------------------------------------------------- criterion 5

std::string criterion5() {
  PrimeField F(7);
  CurveFp curve{F.one(), F.one()};
  ExtField K2(F, 2, F.make_int(3));
  CurveExt c2 = curve_to_ext(curve, K2);
  SummationEvaluator ev(curve.A, curve.B);

  auto pts = enumerate_ext_points(curve, K2);
  std::vector<ExtEl> xs;
  for (const auto& p : pts)
    if (!p.inf) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end(), [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const size_t nx = xs.size();
  auto xid = [&](const ExtEl& x) {
    return static_cast<uint64_t>(
        std::lower_bound(xs.begin(), xs.end(), x,
                         [](const ExtEl& a, const ExtEl& b) { return a.cmp(b) < 0; }) -
        xs.begin());
  };
  auto pack = [](uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return ((a * 64 + b) * 64 + c) * 64 + d;
  };

  // f_3, exhaustive over x-coordinate triples
  std::set<uint64_t> lift3;
  for (const auto& p1 : pts) {
    if (p1.inf) continue;
    for (const auto& p2 : pts) {
      if (p2.inf) continue;
      PtExt s = pt_add(c2, p1, p2);
      if (!s.inf) lift3.insert(pack(xid(p1.x), xid(p2.x), xid(s.x), 0));
    }
  }
  size_t n3 = 0;
  for (uint64_t i = 0; i < nx; ++i)
    for (uint64_t j = 0; j < nx; ++j)
      for (uint64_t k = 0; k < nx; ++k) {
        bool vanish = ev.eval(std::vector<ExtEl>{xs[i], xs[j], xs[k]}).is_zero();
        require(vanish == (lift3.count(pack(i, j, k, 0)) > 0), "f_3 oracle mismatch");
        ++n3;
      }

  // f_4, exhaustive over x-coordinate quadruples
  std::set<uint64_t> lift4;
  for (const auto& p1 : pts) {
    if (p1.inf) continue;
    for (const auto& p2 : pts) {
      if (p2.inf) continue;
      PtExt s12 = pt_add(c2, p1, p2);
      for (const auto& p3 : pts) {
        if (p3.inf) continue;
        PtExt s = pt_add(c2, s12, p3);
        if (!s.inf) lift4.insert(pack(xid(p1.x), xid(p2.x), xid(p3.x), xid(s.x)));
      }
    }
  }
  std::atomic<size_t> n4{0};
  parallel_for(nx, [&](size_t i) {
    for (uint64_t j = 0; j < nx; ++j)
      for (uint64_t k = 0; k < nx; ++k)
        for (uint64_t l = 0; l < nx; ++l) {
          bool vanish = ev.eval(std::vector<ExtEl>{xs[i], xs[j], xs[k], xs[l]}).is_zero();
          require(vanish == (lift4.count(pack(i, j, k, l)) > 0), "f_4 oracle mismatch");
          n4.fetch_add(1);
        }
  });

  // f_5 on sampled tuples; lifts of these x-coordinates all live in E(F_49),
  // so liftability is decidable by enumerating sign choices there
  std::vector<PtExt> lift_of(nx, PtExt::infinity(K2.zero()));
  for (const auto& p : pts)
    if (!p.inf) lift_of[xid(p.x)] = p;
  std::atomic<size_t> n5{0};
  parallel_for(10000, [&](size_t trial) {
    Rng local(trial * 0x9e3779b97f4a7c15ULL + 5);
    uint64_t id[5];
    std::vector<ExtEl> tuple;
    for (int i = 0; i < 5; ++i) {
      id[i] = local.below(nx);
      tuple.push_back(xs[id[i]]);
    }
    bool vanish = ev.eval(tuple).is_zero();
    bool liftable = false;
    for (unsigned mask = 0; mask < 16 && !liftable; ++mask) {
      PtExt s = PtExt::infinity(K2.zero());
      for (int i = 0; i < 4; ++i) {
        PtExt term = lift_of[id[i]];
        s = pt_add(c2, s, (mask >> i) & 1 ? pt_neg(term) : term);
      }
      liftable = !s.inf && s.x == tuple[4];
    }
    require(vanish == liftable, "f_5 oracle mismatch");
    n5.fetch_add(1);
  });

  std::ostringstream os;
  os << "f_3 " << n3 << " and f_4 " << n4.load() << " tuples exhaustive, f_5 " << n5.load()
     << " sampled, zero discrepancies";
  return os.str();
}

// ---------------------------------------------------------------- criterion 6

std::string criterion6() {
  struct StatCurve {
    mpz_class q;
    long B;
    size_t points;
  };
  const StatCurve curves[] = {{kQ40, 7, 4000}, {kQ50, 11, 3500}, {kQ60n5, 135, 2500}};
  std::atomic<size_t> single{0}, at_most_two{0}, total{0};
  size_t max_classes = 0;
  std::mutex max_mutex;
  for (const auto& sc : curves) {
    // count |E(F_q)| so that the trace zero sampler is exactly uniform
    mpz_class n1;
    {
      PrimeField F(sc.q);
      CurveFp c{F.one(), F.make_int(sc.B)};
      Rng r(1);
      n1 = count_points_bsgs(F, c, r);
    }
    TzParams P = TzParams::create(sc.q, 5, 1, sc.B, std::nullopt, n1);
    parallel_for(sc.points, [&](size_t i) {
      Rng local(i * 6364136223846793005ULL + 1442695040888963407ULL);
      PtExt pt = random_trace_zero_point(P, local);
      auto classes = decompress(P, compress(P, pt, Variant::S, false));
      require(!classes.empty() && classes.size() <= 6, "class count out of range");
      bool found = false;
      for (const auto& c : classes) found = found || classes_equal(P, c.canonical(), pt);
      require(found, "roundtrip failure during sampling");
      total.fetch_add(1);
      if (classes.size() == 1) single.fetch_add(1);
      if (classes.size() <= 2) at_most_two.fetch_add(1);
      std::lock_guard<std::mutex> lock(max_mutex);
      max_classes = std::max(max_classes, classes.size());
    });
  }
  double frac1 = double(single.load()) / double(total.load());
  double frac2 = double(at_most_two.load()) / double(total.load());
  require(total.load() >= 10000, "not enough samples");
  require(frac1 >= 0.90, "single-class fraction below 90%: " + std::to_string(frac1));
  require(frac2 >= 0.99, "two-class fraction below 99%: " + std::to_string(frac2));
  require(max_classes <= 6, "hard ambiguity cap exceeded");
  std::ostringstream os;
  os << total.load() << " points over 3 curves: " << std::fixed << std::setprecision(2)
     << frac1 * 100 << "% single, " << frac2 * 100 << "% at most two, max " << max_classes;
  return os.str();
}

// ---------------------------------------------------------------- criterion 7

std::string criterion7() {
  size_t trials_per_n = 1000;
  for (unsigned n : {3u, 5u}) {
    const mpz_class& q = n == 3 ? kQ60n3 : kQ60n5;
    long B = n == 3 ? 7 : 135;
    mpz_class n1;
    {
      PrimeField F(q);
      CurveFp c{F.one(), F.make_int(B)};
      Rng r(2);
      n1 = count_points_bsgs(F, c, r);
    }
    TzParams P = TzParams::create(q, n, 1, B, std::nullopt, n1);
    parallel_for(trials_per_n, [&](size_t i) {
      Rng local(i * 0x2545F4914F6CDD1DULL + n);
      PtExt pt = random_trace_zero_point(P, local);
      mpz_class k = local.mpz_below(mpz_class(1) << 64) + 1;
      PtExt kpt = scalar_mul(P.curve_ext(), k, pt);
      if (kpt.inf) return;
      Compressed base = compress(P, kpt, Variant::S, false);
      for (unsigned j = 0; j < P.n(); ++j) {
        PtExt conj = frobenius_point(pt, j);
        for (PtExt var : {conj, pt_neg(conj)}) {
          PtExt kv = scalar_mul(P.curve_ext(), k, var);
          require(!kv.inf, "conjugate annihilated unexpectedly");
          require(compress(P, kv, Variant::S, false).coords == base.coords,
                  "compression differs across the class after scalar multiplication");
        }
      }
    });
  }
  return "2000 (P, k) trials, all 2n variants agree per trial";
}

// ---------------------------------------------------------------- criterion 8

std::string criterion8() {
  TzParams P = TzParams::create(kQ60n3, 3, 1, 7);
  BenchLine cs = bench_compress(P, Variant::S, 20000, 11);
  BenchLine ct = bench_compress(P, Variant::T, 20000, 11);
  require(ct.mean_ms * 1.5 <= cs.mean_ms,
          "t-variant compression not 1.5x faster: " + std::to_string(cs.mean_ms) + " vs " +
              std::to_string(ct.mean_ms));
  BenchLine ds = bench_decompress(P, Variant::S, 2000, 12);
  require(ds.root_share > 0.5,
          "root extraction below half of decompression: " + std::to_string(ds.root_share));
  require(ds.mean_ms >= 10 * cs.mean_ms, "decompression not at least 10x compression");
  std::ostringstream os;
  os << "t/s compression ratio " << std::fixed << std::setprecision(2)
     << cs.mean_ms / ct.mean_ms << "x, root-extraction share " << std::setprecision(1)
     << ds.root_share * 100 << "%";
  return os.str();
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<std::string()> fn;
  };
  const Entry entries[] = {
      {"criterion-1 published n=3 vectors", criterion1},
      {"criterion-2 published n=5 vectors", criterion2},
      {"criterion-3 symbolic golden forms", criterion3},
      {"criterion-4 exhaustive small fields", criterion4},
      {"criterion-5 summation vanishing oracle", criterion5},
      {"criterion-6 n=5 ambiguity statistics", criterion6},
      {"criterion-7 scalar multiplication compatibility", criterion7},
      {"criterion-8 directional performance", criterion8},
  };
  int failures = 0;
  for (const auto& e : entries) {
    auto t0 = Clock::now();
    try {
      std::string detail = e.fn();
      std::cout << "PASS  " << e.name << "  [" << detail << "]" << std::endl;
    } catch (const std::exception& ex) {
      ++failures;
      std::cout << "FAIL  " << e.name << "  [" << ex.what() << "]  after " << std::fixed
                << std::setprecision(1) << secs_since(t0) << " s" << std::endl;
    }
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
