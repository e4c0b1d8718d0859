#include <algorithm>
#include <functional>

#include "octc/exact/lattice.hpp"
#include "octc/gkz/gkz.hpp"

namespace octc {

namespace {

struct Roles {
  std::vector<int> A_K, A_orb;
  std::map<int, int> iota;
};

RatMatrix d_rows(const GKZData& gkz, const std::vector<int>& idx) {
  std::vector<RatVec> rows;
  for (int i : idx) rows.push_back(gkz.d(i));
  return RatMatrix::from_rows(rows, gkz.k);
}

// Orbifold roles, nef membership and conditions (i)-(iv); scale invariant.
Roles check_conditions(const ExtendedStackyFan& fan, const GKZData& gkz, const std::vector<RatVec>& p) {
  const int k = gkz.k;
  if (static_cast<int>(p.size()) != k)
    throw PBasisError("(i)", "expected " + std::to_string(k) + " vectors, got " + std::to_string(p.size()));
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (static_cast<int>(p[a].size()) != k) throw PBasisError("(i)", "p" + std::to_string(a + 1) + " has wrong length");
    for (const auto& x : p[a])
      if (!is_integer(x)) throw PBasisError("lattice", "p" + std::to_string(a + 1) + " is not a lattice vector");
    if (!gkz.nef_h.contains(p[a]))
      throw PBasisError("nef", "p" + std::to_string(a + 1) + " = " + to_string(p[a]) + " is not in the extended Nef cone");
  }
  const auto& orb = fan.orbifold();
  for (std::size_t x = 0; x < orb.size(); ++x)
    for (std::size_t y = x + 1; y < orb.size(); ++y)
      if (gkz.d(orb[x]) == gkz.d(orb[y]))
        throw PBasisError("(iii)", "orbifold points " + std::to_string(orb[x]) + " and " + std::to_string(orb[y]) +
                                       " share the class " + to_string(gkz.d(orb[x])));
  Roles roles;
  std::vector<bool> taken(p.size(), false);
  for (int i : orb) {
    int hit = -1;
    for (std::size_t a = 0; a < p.size(); ++a)
      if (p[a] == gkz.d(i)) {
        if (hit >= 0) throw PBasisError("(iii)", "class D" + std::to_string(i) + " repeated in the basis");
        hit = static_cast<int>(a);
      }
    if (hit < 0) throw PBasisError("(iii)", "no p_a equals D" + std::to_string(i));
    taken[hit] = true;
    roles.iota[i] = hit + 1;
  }
  for (std::size_t a = 0; a < p.size(); ++a) (taken[a] ? roles.A_orb : roles.A_K).push_back(static_cast<int>(a) + 1);
  if (k > 0 && rank(RatMatrix::from_rows(p, k)) != static_cast<std::size_t>(k))
    throw PBasisError("(i)", "vectors are linearly dependent");
  if (static_cast<int>(roles.A_K.size()) != gkz.pic_rank)
    throw PBasisError("(ii)", "Kahler part has " + std::to_string(roles.A_K.size()) + " vectors, Picard rank is " +
                                  std::to_string(gkz.pic_rank));
  for (int a : roles.A_K)
    for (int i : orb) {
      RatVec diff = p[a - 1];
      for (int j = 0; j < k; ++j) diff[j] -= gkz.d(i)[j];
      if (gkz.nef_h.contains(diff))
        throw PBasisError("(iv)", "p" + std::to_string(a) + " - D" + std::to_string(i) + " lies in the extended Nef cone");
    }
  return roles;
}

// Coefficients of v on {D_i : i in I_sigma}, spread over 1..R.
RatVec expansion(const ExtendedStackyFan& fan, const GKZData& gkz, const Cone3& sigma, const RatVec& v) {
  auto idx = complement_indices(fan, sigma);
  RatMatrix m = d_rows(gkz, idx).transpose();
  auto sol = solve(m, v);
  if (!sol) throw CheckFailure("D classes off the cone " + to_string(sigma) + " do not span");
  RatVec out(fan.R(), BigRational(0));
  for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j] - 1] = (*sol)[j];
  return out;
}

}  // namespace

const IntMatrix& PBasis::s_matrix(const ExtendedStackyFan& fan, const Cone3& sigma) const {
  return s.at(cone_index(fan, sigma));
}

PBasis check_pbasis(const ExtendedStackyFan& fan, const GKZData& gkz, const std::vector<RatVec>& p) {
  Roles roles = check_conditions(fan, gkz, p);
  PBasis pb;
  pb.p = p;
  pb.A_K = roles.A_K;
  pb.A_orb = roles.A_orb;
  pb.iota = roles.iota;
  for (const auto& sigma : fan.cones()) {
    IntMatrix s(gkz.k, fan.R());
    for (int a = 0; a < gkz.k; ++a) {
      RatVec e = expansion(fan, gkz, sigma, p[a]);
      for (int i = 0; i < fan.R(); ++i) {
        if (e[i] < 0) throw PBasisError("nef", "negative coefficient of D" + std::to_string(i + 1) + " in p" + std::to_string(a + 1));
        if (!is_integer(e[i]))
          throw PBasisError("integrality", "p" + std::to_string(a + 1) + " has fractional coefficient " + to_string(e[i]) +
                                               " on D" + std::to_string(i + 1) + " for cone " + to_string(sigma));
        s(a, i) = num(e[i]);
      }
    }
    pb.s.push_back(std::move(s));
  }
  return pb;
}

std::vector<RatVec> integral_rescaling(const std::vector<const ExtendedStackyFan*>& fans,
                                       const std::vector<const GKZData*>& gkzs, const std::vector<RatVec>& p,
                                       const std::vector<bool>& rescalable) {
  std::vector<RatVec> out = p;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!rescalable.at(a)) continue;
    BigInt m = 1;
    for (std::size_t f = 0; f < fans.size(); ++f)
      for (const auto& sigma : fans[f]->cones())
        for (const auto& c : expansion(*fans[f], *gkzs[f], sigma, p[a])) m = lcm(m, den(c));
    for (auto& x : out[a]) x *= m;
  }
  return out;
}

namespace {

void points_of_size(int k, int size, const std::function<bool(const RatVec&)>& visit) {
  std::vector<long> v(k, 0);
  bool stop = false;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (stop) return;
    if (pos == k - 1) {
      for (long x : {-static_cast<long>(left), static_cast<long>(left)}) {
        v[pos] = x;
        if (visit(to_rat_vec(v))) { stop = true; return; }
        if (left == 0) break;
      }
      return;
    }
    for (long x = -left; x <= left && !stop; ++x) {
      v[pos] = x;
      rec(pos + 1, left - static_cast<int>(std::labs(x)));
    }
  };
  rec(0, size);
}

}  // namespace

std::vector<RatVec> lattice_points_by_size(int k, int bound) {
  if (k == 0) return {RatVec{}};
  std::vector<RatVec> out;
  for (int s = 0; s <= bound; ++s)
    points_of_size(k, s, [&](const RatVec& v) {
      out.push_back(v);
      return false;
    });
  return out;
}

PBasis select_pbasis(const ExtendedStackyFan& fan, const GKZData& gkz, const std::optional<std::vector<RatVec>>& hints) {
  if (hints) {
    check_conditions(fan, gkz, *hints);
    std::vector<bool> resc(hints->size(), true);
    for (int i : fan.orbifold())
      for (std::size_t a = 0; a < hints->size(); ++a)
        if ((*hints)[a] == gkz.d(i)) resc[a] = false;
    return check_pbasis(fan, gkz, integral_rescaling({&fan}, {&gkz}, *hints, resc));
  }
  const int k = gkz.k;
  std::vector<RatVec> orb_rows;
  for (int i : fan.orbifold()) orb_rows.push_back(gkz.d(i));
  std::vector<RatVec> kahler;
  auto span_rank = [&](const std::vector<RatVec>& extra) {
    std::vector<RatVec> rows = orb_rows;
    rows.insert(rows.end(), extra.begin(), extra.end());
    return rows.empty() ? std::size_t{0} : rank(RatMatrix::from_rows(rows, k));
  };
  std::size_t have = span_rank({});
  for (int size = 1; size <= kPBasisSearchBound && static_cast<int>(kahler.size()) < gkz.pic_rank; ++size) {
    points_of_size(k, size, [&](const RatVec& v) {
      if (!gkz.nef_h.contains(v)) return false;
      for (int i : fan.orbifold()) {
        RatVec diff = v;
        for (int j = 0; j < k; ++j) diff[j] -= gkz.d(i)[j];
        if (gkz.nef_h.contains(diff)) return false;
      }
      auto trial = kahler;
      trial.push_back(v);
      std::size_t r = span_rank(trial);
      if (r > have) {
        kahler = trial;
        have = r;
      }
      return static_cast<int>(kahler.size()) == gkz.pic_rank;
    });
  }
  if (static_cast<int>(kahler.size()) < gkz.pic_rank)
    throw PBasisError("search", "no p-basis found with coordinate sum <= " + std::to_string(kPBasisSearchBound) +
                                    "; supply hints");
  std::vector<RatVec> p = kahler;
  std::vector<bool> resc(p.size(), true);
  for (const auto& d : orb_rows) {
    p.push_back(d);
    resc.push_back(false);
  }
  return check_pbasis(fan, gkz, integral_rescaling({&fan}, {&gkz}, p, resc));
}

IntVec s_monomial(const ExtendedStackyFan& fan, const PBasis& pb, const Cone3& sigma, int i) {
  if (i < 1 || i > fan.R()) throw PreconditionError("point index out of range");
  return pb.s_matrix(fan, sigma).col(i - 1);
}

IntVec q_alpha(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane) {
  (void)gkz;
  if (brane.kind != BraneKind::inner) throw PreconditionError("q^alpha is defined for inner branes only");
  const auto& sigma = brane.primary.sigma;
  const IntMatrix& s = pb.s_matrix(fan, sigma);
  const int k = pb.k();
  IntVec out(k);
  for (int a = 0; a < k; ++a) {
    const BigInt& e = s(a, brane.i4 - 1);
    if (e % brane.r_prime != 0)
      throw CheckFailure("q^alpha: exponent of q" + std::to_string(a + 1) + " in s_" + std::to_string(brane.i4) +
                         " is not divisible by r' = " + std::to_string(brane.r_prime));
    out[a] = e / brane.r_prime;
  }
  for (int a : pb.A_orb)
    if (out[a - 1] != 0) throw CheckFailure("q^alpha involves the orbifold parameter q" + std::to_string(a));
  auto frame = flag_frame(fan, brane.primary);
  for (int i = 1; i <= fan.R(); ++i) {
    long m = frame.m(i);
    if (m >= 0) continue;
    for (int a = 0; a < k; ++a)
      if (s(a, i - 1) < out[a] * (-m))
        throw CheckFailure("(q^alpha)^" + std::to_string(-m) + " does not divide s_" + std::to_string(i));
  }
  return out;
}

RatVec q_alpha_pairing(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane) {
  if (brane.kind != BraneKind::inner) throw PreconditionError("q^alpha is defined for inner branes only");
  auto frame = flag_frame(fan, brane.primary);
  const int R = fan.R();
  // alpha in L_Q: prescribed on i1 and i4, zero off the curve, balanced on i2, i3
  RatVec alpha(R, BigRational(0));
  alpha[frame.i1 - 1] = BigRational(1, frame.r);
  alpha[brane.i4 - 1] = BigRational(1, brane.r_prime);
  RatMatrix beta = to_rat(fan.beta());
  RatVec rhs(3, BigRational(0));
  for (int r = 0; r < 3; ++r) rhs[r] = -(beta(r, frame.i1 - 1) * alpha[frame.i1 - 1] + beta(r, brane.i4 - 1) * alpha[brane.i4 - 1]);
  RatMatrix m(3, 2);
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = beta(r, frame.i2 - 1);
    m(r, 1) = beta(r, frame.i3 - 1);
  }
  auto sol = solve(m, rhs);
  if (!sol) throw CheckFailure("curve class of the inner edge has no balanced lift");
  alpha[frame.i2 - 1] = (*sol)[0];
  alpha[frame.i3 - 1] = (*sol)[1];
  auto t = solve(to_rat(gkz.L_basis), alpha);
  if (!t) throw CheckFailure("curve class is not in L_Q");
  RatVec out;
  for (const auto& p : pb.p) out.push_back(dot(p, *t));
  return out;
}

}  // namespace octc
