#include "skewdual/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "skewdual/basis.hpp"
#include "skewdual/constacyclic.hpp"
#include "skewdual/convolutional.hpp"
#include "skewdual/skewrs.hpp"

namespace skewdual {
namespace {

using Rng = std::mt19937_64;

// Random-sample loops run base * samples / 100 times (at least once).
struct Ctx {
  Rng rng;
  unsigned samples;
  int count(int base) const { return std::max(1, static_cast<int>(base * static_cast<long>(samples) / 100)); }
};

void expect(CheckReport& r, bool ok, const std::string& what, const std::string& lhs = "",
            const std::string& rhs = "") {
  ++r.checked;
  if (!ok) r.record(what, lhs, rhs);
}

Felt rand_felt(const Field& f, Rng& rng) { return Felt{static_cast<std::uint32_t>(rng() % f.q())}; }
Felt rand_nonzero(const Field& f, Rng& rng) {
  return Felt{static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
}

std::string show(Felt x) { return std::to_string(x.value); }

SkewPoly rand_skew(const Field& f, FieldAut s, Convention c, std::size_t max_deg, Rng& rng) {
  std::vector<Felt> coeffs(rng() % (max_deg + 1) + 1);
  for (Felt& x : coeffs) x = rand_felt(f, rng);
  coeffs.back() = rand_nonzero(f, rng);
  return SkewPoly(f, s, c, std::move(coeffs));
}

std::vector<Field> small_fields() {
  return {Field::create(2, 2), Field::create(2, 3), Field::create(2, 4), Field::create(3, 2),
          Field::create(3, 3), Field::create(5, 2)};
}

CheckReport suite_gf(Ctx& ctx) {
  Rng& rng = ctx.rng;
  CheckReport r;
  for (const Field& f : small_fields()) {
    const std::string tag = f.describe();
    for (std::uint32_t v = 0; v < f.q(); ++v) {
      expect(r, f.frobenius(f.m(), Felt{v}) == Felt{v}, tag + " frobenius^m x=" + std::to_string(v));
    }
    for (int i = 0, n_ = ctx.count(200); i < n_; ++i) {
      const Felt x = rand_felt(f, rng), y = rand_felt(f, rng);
      const unsigned s = static_cast<unsigned>(rng() % f.m());
      expect(r, f.frobenius(s, f.add(x, y)) == f.add(f.frobenius(s, x), f.frobenius(s, y)),
             tag + " frobenius additive " + show(x) + "," + show(y));
      expect(r, f.frobenius(s, f.mul(x, y)) == f.mul(f.frobenius(s, x), f.frobenius(s, y)),
             tag + " frobenius multiplicative " + show(x) + "," + show(y));
    }
    for (unsigned d = 1; d <= f.m(); ++d) {
      if (f.m() % d) continue;
      for (int i = 0, n_ = ctx.count(100); i < n_; ++i) {
        const Felt x = rand_felt(f, rng), y = rand_felt(f, rng);
        const Felt c = f.trace(d, rand_felt(f, rng));  // a subfield scalar
        expect(r, f.trace(d, f.add(f.mul(c, x), y)) == f.add(f.mul(c, f.trace(d, x)), f.trace(d, y)),
               tag + " trace linear d=" + std::to_string(d));
        expect(r, f.norm(d, f.mul(x, y)) == f.mul(f.norm(d, x), f.norm(d, y)),
               tag + " norm multiplicative d=" + std::to_string(d));
        expect(r, f.trace(d, f.frobenius(d, x)) == f.trace(d, x), tag + " trace frobenius-invariant");
        expect(r, f.trace(d, f.frobenius(1, x)) == f.frobenius(1, f.trace(d, x)), tag + " trace commutes with x^p");
      }
      // Random bases: dual relation and coordinate round trip.
      const unsigned t = f.m() / d;
      for (int i = 0, n_ = ctx.count(10); i < n_; ++i) {
        std::vector<Felt> elems(t);
        for (Felt& e : elems) e = rand_nonzero(f, rng);
        if (!inverse(trace_gram(f, d, elems))) continue;
        const SubfieldBasis b = make_subfield_basis(f, d, elems);
        for (unsigned a = 0; a < t; ++a) {
          for (unsigned c = 0; c < t; ++c) {
            expect(r, f.trace(d, f.mul(b.elements[a], b.dual[c])) == Felt{a == c ? 1u : 0u},
                   tag + " dual basis relation");
          }
        }
        expect(r, dual_basis(dual_basis(b)).elements == b.elements, tag + " dual basis involution");
        const Felt x = rand_felt(f, rng);
        expect(r, basis_combine(b, basis_coordinates(b, x)) == x, tag + " coordinate round trip");
      }
      for (std::uint32_t v = 1; v < f.q(); ++v) {
        if (f.norm(d, Felt{v}) != f.one()) continue;
        const Felt nu = hilbert90(f, d, Felt{v});
        expect(r, f.div(f.frobenius(d, nu), nu) == Felt{v}, tag + " hilbert90 mu=" + std::to_string(v),
               show(nu));
      }
    }
  }
  return r;
}

CheckReport suite_skewpoly(Ctx& ctx) {
  Rng& rng = ctx.rng;
  CheckReport r;
  const std::vector<Field> fields = small_fields();
  for (const Field& f : fields) {
    for (unsigned s = 0; s < f.m(); ++s) {
      for (Convention c : {Convention::Left, Convention::Right}) {
        const FieldAut sigma{s};
        for (int i = 0, n_ = ctx.count(100); i < n_; ++i) {
          const SkewPoly a = rand_skew(f, sigma, c, 6, rng), b = rand_skew(f, sigma, c, 4, rng);
          const SkewDivision right = sp_divide(Side::Right, a, b);
          expect(r, right.quot * b + right.rem == a && right.rem.degree() < b.degree(),
                 "right division " + a.to_string() + " / " + b.to_string());
          const SkewDivision left = sp_divide(Side::Left, a, b);
          expect(r, b * left.quot + left.rem == a && left.rem.degree() < b.degree(),
                 "left division " + a.to_string() + " / " + b.to_string());
        }
        for (int i = 0, n_ = ctx.count(20); i < n_; ++i) {
          const SkewPoly a = rand_skew(f, sigma, c, 4, rng), b = rand_skew(f, sigma, c, 4, rng);
          const SkewPoly g = gcrd(a, b), l = lclm(a, b);
          expect(r, sp_divide(Side::Right, a, g).rem.is_zero() && sp_divide(Side::Right, b, g).rem.is_zero(),
                 "gcrd right-divides " + a.to_string() + " ; " + b.to_string());
          expect(r, sp_divide(Side::Right, l, a).rem.is_zero() && sp_divide(Side::Right, l, b).rem.is_zero(),
                 "lclm left multiple " + a.to_string() + " ; " + b.to_string());
          expect(r, l.degree().value() + g.degree().value() == a.degree().value() + b.degree().value(),
                 "lclm/gcrd degree identity");
          const SkewPoly gl = gcld(a, b), lr = lcrm(a, b);
          expect(r, lr.degree().value() + gl.degree().value() == a.degree().value() + b.degree().value(),
                 "lcrm/gcld degree identity");
          expect(r, convert_convention(convert_convention(a)) == a, "convention round trip");
          expect(r, convert_convention(a * b) == convert_convention(a) * convert_convention(b),
                 "convention conversion is multiplicative");
        }
      }
    }
    // sigma = id against commutative polynomials.
    for (int i = 0, n_ = ctx.count(50); i < n_; ++i) {
      const SkewPoly a = rand_skew(f, FieldAut{0}, Convention::Left, 6, rng);
      const SkewPoly b = rand_skew(f, FieldAut{0}, Convention::Left, 4, rng);
      const auto [q, rem] = divmod(to_commutative(a), to_commutative(b));
      const SkewDivision sd = sp_divide(Side::Right, a, b);
      expect(r, to_commutative(a * b) == to_commutative(a) * to_commutative(b), "commutative product");
      expect(r, to_commutative(sd.quot) == q && to_commutative(sd.rem) == rem, "commutative division");
      expect(r, to_commutative(gcrd(a, b)) == gcd(to_commutative(a), to_commutative(b)), "commutative gcd");
    }
    // Right evaluation, both formulas.
    for (unsigned s = 0; s < f.m(); ++s) {
      for (int i = 0, n_ = ctx.count(50); i < n_; ++i) {
        const SkewPoly a = rand_skew(f, FieldAut{s}, Convention::Left, 6, rng);
        const Felt x = rand_felt(f, rng);
        expect(r, sp_right_eval(a, x) == sp_right_eval_norms(a, x),
               "right evaluation " + a.to_string() + " at " + show(x));
      }
    }
  }
  return r;
}

CheckReport suite_linalg(Ctx& ctx) {
  Rng& rng = ctx.rng;
  CheckReport r;
  for (const Field& f : {Field::create(2, 1), Field::create(2, 2), Field::create(3, 1)}) {
    for (int i = 0, n_ = ctx.count(50); i < n_; ++i) {
      Mat m(f, 1 + rng() % 5, 1 + rng() % 6);
      for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = rng() % 3 ? rand_felt(f, rng) : Felt{0};
      }
      const RrefResult rr = rref(m);
      expect(r, rref(rr.reduced).reduced == rr.reduced, "rref idempotent " + to_string(m));
      expect(r, same_row_space(m, rr.reduced), "rref preserves row space " + to_string(m));
      const Mat ns = nullspace(m);
      expect(r, (ns.rows() == 0 || (ns * transpose(m)).is_zero()) && rank(ns) + rr.rank == m.cols(),
             "nullspace " + to_string(m));
    }
    for (int i = 0, n_ = ctx.count(20); i < n_; ++i) {
      PolyMat m(f, 1 + rng() % 3, 1 + rng() % 3);
      for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) {
          std::vector<Felt> c(rng() % 3);
          for (Felt& x : c) x = rand_felt(f, rng);
          m(a, b) = Poly(f, std::move(c));
        }
      }
      const HermiteResult hr = poly_hnf(m);
      expect(r, hr.u * m == hr.h, "hnf transform " + to_string(m));
      expect(r, is_unimodular(hr.u), "hnf transform unimodular " + to_string(m));
      const PolyMat k = poly_left_kernel(m);
      expect(r, k.rows() == 0 || (k * m).is_zero(), "left kernel annihilates " + to_string(m));
      // Random unimodular change of generators keeps the Hermite basis.
      PolyMat u = PolyMat::identity(f, m.rows());
      for (std::size_t a = 0; a + 1 < m.rows(); ++a) u(a, a + 1) = Poly(f, {rand_felt(f, rng), rand_felt(f, rng)});
      expect(r, same_row_module(u * m, m), "hnf invariant under unimodular change " + to_string(m));
    }
  }
  return r;
}

CheckReport suite_constacyclic(Ctx& ctx) {
  Rng& rng = ctx.rng;
  CheckReport r;
  struct Case {
    unsigned p, m, s;
    std::size_t n;
  };
  for (const Case& c : {Case{2, 2, 1, 2}, Case{2, 3, 1, 3}, Case{3, 2, 1, 2}, Case{2, 4, 2, 2}}) {
    const Field L = Field::create(c.p, c.m);
    for (Felt u : admissible_units(L, FieldAut{c.s})) {
      const ConstaRing R = ConstaRing::create(L, FieldAut{c.s}, c.n, u);
      const std::string tag = L.describe() + " n=" + std::to_string(c.n) + " u=" + show(u);
      CheckReport t = check_transposition(R, R.hat(), [&R](const ConstaElt& a) { return theta(R, a); }, ctx.count(200), rng);
      for (auto& fl : t.failures) fl.input = tag + " " + fl.input;
      r.merge(t);
      for (int i = 0, n_ = ctx.count(20); i < n_; ++i) {
        const ConstaElt a = R.random(rng);
        expect(r, mrep_consta(R, a) == mrep(R, a), tag + " closed-form M_R " + R.describe(a));
      }
      for (const SkewPoly& f : monic_left_divisors(R)) {
        const ConstaDual d = consta_dual(R, f);
        expect(r, d.codes.kernel_match() && d.codes.theta_match() && d.dimensions_add_up,
               tag + " dual of f=" + f.to_string(), to_string(d.codes.dual.canonical()),
               to_string(d.codes.dual_by_kernel.canonical()));
      }
    }
  }
  return r;
}

CheckReport suite_skewrs(Ctx&) {
  CheckReport r;
  for (const Field& L : {Field::create(2, 2), Field::create(2, 3), Field::create(3, 2), Field::create(2, 4)}) {
    const FieldAut sigma{1};
    for (std::uint32_t a = 1; a < L.q(); ++a) {
      if (!normal_basis_check(L, sigma, Felt{a})) continue;
      const std::string tag = L.describe() + " alpha=" + std::to_string(a);
      expect(r, full_decomposition_check(L, sigma, Felt{a}), tag + " full decomposition");
      for (std::size_t delta = 2; delta <= L.m(); ++delta) {
        const SkewRSCode code = rs_create(L, sigma, Felt{a}, delta);
        const LinearCode<Mat> c = code.code();
        const SkewRSCode dual = rs_dual(code);
        const std::string ctag = tag + " delta=" + std::to_string(delta);
        expect(r, dual.code() == kernel_dual(c), ctag + " dual generator");
        expect(r, min_distance(c) == delta, ctag + " MDS", std::to_string(min_distance(c)), std::to_string(delta));
        expect(r, min_distance(dual.code()) == code.k + 1, ctag + " dual MDS");
        const EvalParams ep = eval_params(code);
        expect(r, L.div(L.apply(sigma, ep.nu), ep.nu) == ep.mu, ctag + " hilbert90");
        expect(r, LinearCode<Mat>(sge_matrix(code, ep)) == c, ctag + " sGE span");
        for (std::size_t k = 0; k < code.n; ++k) {
          expect(r, rightleft_check(code, k), ctag + " rightleft k=" + std::to_string(k));
        }
      }
    }
  }
  return r;
}

CheckReport suite_convolutional(Ctx& ctx) {
  Rng& rng = ctx.rng;
  CheckReport r;
  const WordAmbient W = WordAmbient::create(2, 1, 2, 2);
  for (int i = 0, n_ = ctx.count(5); i < n_; ++i) {
    const MatAut sigma = make_mat_aut(W, W.random_regular(rng), static_cast<unsigned>(rng() % 2));
    const OreRing R(W, sigma);
    const OreRing H = hat_ring(R);
    expect(r, rep_matrices(W, sigma).matches_definition, "closed-form representation matrices");
    expect(r, rep_matrices(W, H.sigma()).m_sigma == transpose(rep_matrices(W, sigma).m_sigma),
           "M_sigma-hat = M_sigma^T");
    for (int j = 0, n_ = ctx.count(5); j < n_; ++j) {
      const Mat a = W.random_matrix(rng);
      expect(r, apply_aut(W, H.sigma(), a) == transpose(apply_aut_inverse(W, sigma, transpose(a))),
             "sigma-hat pointwise " + to_string(a));
      expect(r, transpose(m_a(W, a)) == m_a(W, transpose(a)), "M_a^T = M_(a^T) " + to_string(a));
    }
    r.merge(check_transposition(R, H, [&R](const OrePoly& f) { return theta_conv(R, f); }, ctx.count(40), rng));
    for (int j = 0, n_ = ctx.count(5); j < n_; ++j) {
      const OrePoly f = R.random(rng);
      expect(r, m_r_poly(R, f) == mrep(R, f), "closed-form M_R " + R.describe(f));
    }
    const Mat e = random_conjugated_idempotent(W, rng);
    const LiccDual d = licc_dual_idem(R, e);
    expect(r, d.codes.kernel_match() && d.transposition && d.direct_summand,
           "idempotent dual e=" + to_string(e));
  }
  return r;
}

const std::map<std::string, std::function<CheckReport(Ctx&)>>& registry() {
  static const std::map<std::string, std::function<CheckReport(Ctx&)>> suites{
      {"gf", suite_gf},
      {"skewpoly", suite_skewpoly},
      {"linalg", suite_linalg},
      {"constacyclic", suite_constacyclic},
      {"skewrs", suite_skewrs},
      {"convolutional", suite_convolutional},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gf", "skewpoly", "linalg", "constacyclic", "skewrs", "convolutional"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned samples) {
  const auto it = registry().find(name);
  require(it != registry().end(), ErrorKind::InvalidArgument, "unknown suite " + name);
  Ctx ctx{Rng(seed), samples};
  return {name, it->second(ctx)};
}

}  // namespace skewdual
