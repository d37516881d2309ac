#include "ras/abgroup.hpp"

#include <sstream>
#include <utility>

#include "ras/error.hpp"

namespace ras {

AbGroup::AbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (const auto& n : torsion_)
    if (n < 2) throw ValidationError("torsion orders must be at least 2");
}

AbGroup::Element AbGroup::generator(std::size_t i) const {
  if (i >= dimension()) throw PreconditionError("generator index out of range");
  Element x = zero();
  x[i] = 1;
  return x;
}

void AbGroup::check(const Element& x) const {
  if (x.size() != dimension())
    throw ValidationError("group element has " + std::to_string(x.size()) +
                          " coordinates, expected " + std::to_string(dimension()));
}

AbGroup::Element AbGroup::reduce(Element x) const {
  check(x);
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    auto& c = x[free_rank_ + j];
    c = mod_floor(c, torsion_[j]);
  }
  return x;
}

AbGroup::Element AbGroup::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i] + b[i];
  return reduce(std::move(x));
}

AbGroup::Element AbGroup::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i] - b[i];
  return reduce(std::move(x));
}

AbGroup::Element AbGroup::scale(const Integer& k, const Element& a) const {
  check(a);
  Element x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = k * a[i];
  return reduce(std::move(x));
}

bool AbGroup::is_zero(const Element& a) const {
  Element r = reduce(a);
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

std::optional<Integer> AbGroup::order(const Element& a) const {
  Element r = reduce(a);
  for (std::size_t i = 0; i < free_rank_; ++i)
    if (r[i] != 0) return std::nullopt;
  Integer o = 1;
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    const Integer& n = torsion_[j];
    o = lcm(o, n / gcd(n, r[free_rank_ + j]));
  }
  return o;
}

std::string AbGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& n : torsion_) {
    if (!first) out << " + ";
    out << "Z/" << n;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

struct Smith {
  std::vector<Integer> diagonal;
  IntMatrix vinv;  // new coordinates = vinv * old coordinates
};

Smith smith_form(IntMatrix R, std::size_t cols) {
  const std::size_t rows = R.size();
  IntMatrix V(cols, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : R) std::swap(row[a], row[b]);
    std::swap(V[a], V[b]);
  };
  // col_j -= q col_t
  auto col_sub = [&](std::size_t j, std::size_t t, const Integer& q) {
    for (auto& row : R) row[j] -= q * row[t];
    for (std::size_t k = 0; k < cols; ++k) V[j][k] -= q * V[t][k];
  };

  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the smallest nonzero entry of the remaining block as pivot.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (R[i][j] != 0 && (!found || abs_value(R[i][j]) < abs_value(R[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    std::swap(R[t], R[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (R[i][t] == 0) continue;
        Integer q = R[i][t] / R[t][t];
        for (std::size_t j = t; j < cols; ++j) R[i][j] -= q * R[t][j];
        if (R[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (R[t][j] == 0) continue;
        Integer q = R[t][j] / R[t][t];
        col_sub(j, t, q);
        if (R[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility so the diagonal is the invariant factor chain.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (R[i][j] % R[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) R[t][k] += R[i][k];
              divides = false;
              break;
            }
        if (divides) break;
        continue;
      }
      // Move the smallest remaining entry of row t or column t to the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (R[i][t] != 0 && abs_value(R[i][t]) < abs_value(R[bi][bj])) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (R[t][j] != 0 && abs_value(R[t][j]) < abs_value(R[bi][bj])) {
          bi = t;
          bj = j;
        }
      std::swap(R[t], R[bi]);
      swap_cols(t, bj);
    }
    if (R[t][t] < 0)
      for (auto& x : R[t]) x = -x;
    diag.push_back(R[t][t]);
    ++t;
  }
  return Smith{std::move(diag), std::move(V)};
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix A) {
  std::size_t cols = A.empty() ? 0 : A[0].size();
  return smith_form(std::move(A), cols).diagonal;
}

AbGroup::Quotient AbGroup::quotient(const std::vector<Element>& relations) const {
  const std::size_t N = dimension();
  IntMatrix R;
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    std::vector<Integer> row(N);
    row[free_rank_ + j] = torsion_[j];
    R.push_back(std::move(row));
  }
  for (const auto& w : relations) R.push_back(reduce(w));
  Smith S = smith_form(std::move(R), N);

  const std::size_t rank = S.diagonal.size();
  std::vector<Integer> new_torsion;
  IntMatrix proj;
  for (std::size_t i = rank; i < N; ++i) proj.push_back(S.vinv[i]);
  const std::size_t new_free = proj.size();
  for (std::size_t i = 0; i < rank; ++i) {
    if (S.diagonal[i] == 1) continue;
    new_torsion.push_back(S.diagonal[i]);
    proj.push_back(S.vinv[i]);
  }
  return Quotient{AbGroup(new_free, std::move(new_torsion)), std::move(proj)};
}

AbGroup::Quotient AbGroup::quotient(const Element& w) const {
  return quotient(std::vector<Element>{w});
}

AbGroup::Element AbGroup::Quotient::project(const Element& x) const {
  Element y(projection.size());
  for (std::size_t i = 0; i < projection.size(); ++i) {
    Integer t = 0;
    for (std::size_t k = 0; k < x.size(); ++k) t += projection[i][k] * x[k];
    y[i] = t;
  }
  return group.reduce(std::move(y));
}

}  // namespace ras
