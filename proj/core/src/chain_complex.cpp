// Copyright 2026 The gammahom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gammahom/chain_complex.hpp"

#include <sstream>

#include "gammahom/errors.hpp"
#include "gammahom/field_linalg.hpp"

namespace gammahom {

std::string HomologyGroup::to_string(const Ring& ring) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << (ring.is_prime_field() ? "F" + std::to_string(ring.characteristic()) : ring.symbol());
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

bool HomologyTable::complete() const {
  for (const auto& g : groups)
    if (!g) return false;
  return true;
}

ChainComplex::ChainComplex(Ring ring, std::vector<std::size_t> ranks,
                           std::vector<SparseMatrix> boundaries)
    : ring_(ring), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) {
    if (!boundaries_.empty()) throw ValidationError("boundaries given for an empty complex");
    return;
  }
  if (boundaries_.size() + 1 != ranks_.size())
    throw ValidationError("expected " + std::to_string(ranks_.size() - 1) +
                          " boundary matrices, got " + std::to_string(boundaries_.size()));
  for (std::size_t d = 1; d < ranks_.size(); ++d) {
    const auto& b = boundaries_[d - 1];
    if (b.rows() != ranks_[d - 1] || b.cols() != ranks_[d])
      throw ValidationError("boundary in degree " + std::to_string(d) + " has shape " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                            ", expected " + std::to_string(ranks_[d - 1]) + "x" +
                            std::to_string(ranks_[d]));
  }
}

std::size_t ChainComplex::rank(int d) const {
  if (d < 0 || d > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(d)];
}

SparseMatrix ChainComplex::boundary(int d) const {
  if (d >= 1 && d <= top_degree()) return boundaries_[static_cast<std::size_t>(d - 1)];
  return SparseMatrix(rank(d - 1), rank(d));
}

ChainComplex ChainComplex::with_ring(Ring ring) const {
  ChainComplex c = *this;
  c.ring_ = ring;
  return c;
}

void ChainComplex::check_square_zero() const {
  for (int d = 2; d <= top_degree(); ++d) {
    const SparseMatrix sq = multiply(boundary(d - 1), boundary(d));
    bool zero = true;
    for (std::size_t c = 0; c < sq.cols() && zero; ++c)
      for (const auto& e : sq.column(c)) {
        if (ring_.is_prime_field() && mod_p(e.value, ring_.characteristic()) == 0) continue;
        zero = false;
        break;
      }
    if (!zero)
      throw IntegrityError("boundary does not square to zero in degree " + std::to_string(d));
  }
}

std::size_t matrix_rank(const SparseMatrix& m, const Ring& ring) {
  if (m.is_zero()) return 0;
  if (ring.is_prime_field()) return field_rank(m, ring.characteristic());
  return rational_rank(m);
}

HomologyGroup homology_at(std::size_t dim, const SparseMatrix& incoming,
                          const SparseMatrix& outgoing, const Ring& ring) {
  HomologyGroup g;
  const std::size_t out_rank = matrix_rank(outgoing, ring);
  if (ring.kind() == Ring::Kind::Integers) {
    SmithForm s = smith_normal_form(incoming);
    g.rank = dim - out_rank - s.rank();
    g.torsion = s.torsion();
  } else {
    g.rank = dim - out_rank - matrix_rank(incoming, ring);
  }
  return g;
}

HomologyTable homology(const ChainComplex& c, int max_degree) {
  HomologyTable t;
  t.ring = c.ring();
  for (int d = 0; d <= max_degree; ++d)
    t.groups.emplace_back(homology_at(c.rank(d), c.boundary(d + 1), c.boundary(d), c.ring()));
  return t;
}

bool euler_characteristic_consistent(const ChainComplex& c, const Ring& field) {
  const ChainComplex f = c.with_ring(field);
  const HomologyTable h = homology(f, f.top_degree());
  long long chi_c = 0, chi_h = 0;
  for (int d = 0; d <= f.top_degree(); ++d) {
    const long long sign = d % 2 ? -1 : 1;
    chi_c += sign * static_cast<long long>(f.rank(d));
    chi_h += sign * static_cast<long long>(h.groups[static_cast<std::size_t>(d)]->rank);
  }
  return chi_c == chi_h;
}

bool universal_coefficients_consistent(const ChainComplex& c, int max_degree, std::uint32_t p) {
  const HomologyTable hz = homology(c.with_ring(Ring::integers()), max_degree);
  const HomologyTable hq = homology(c.with_ring(Ring::rationals()), max_degree);
  const HomologyTable hp = homology(c.with_ring(Ring::prime_field(p)), max_degree);
  auto divisible = [p](const HomologyGroup& g) {
    std::size_t n = 0;
    for (const auto& t : g.torsion)
      if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++n;
    return n;
  };
  for (int d = 0; d <= max_degree; ++d) {
    const auto& z = *hz.groups[static_cast<std::size_t>(d)];
    if (hq.groups[static_cast<std::size_t>(d)]->rank != z.rank) return false;
    std::size_t expected = z.rank + divisible(z);
    if (d > 0) expected += divisible(*hz.groups[static_cast<std::size_t>(d - 1)]);
    if (hp.groups[static_cast<std::size_t>(d)]->rank != expected) return false;
  }
  return true;
}

void Multicomplex::set_rank(const MultiIndex& q, std::size_t rank) {
  if (q.directions() != directions_)
    throw ValidationError("multi-index " + q.to_string() + " has the wrong number of directions");
  ranks_[q] = rank;
}

void Multicomplex::set_differential(const MultiIndex& q, int direction, SparseMatrix m) {
  if (direction < 0 || direction >= directions_ || q[direction] == 0)
    throw ValidationError("no differential out of " + q.to_string() + " in direction " +
                          std::to_string(direction));
  const MultiIndex target = q.with(direction, q[direction] - 1);
  if (m.cols() != rank(q) || m.rows() != rank(target))
    throw ValidationError("differential out of " + q.to_string() + " has the wrong shape");
  differentials_[{q, direction}] = std::move(m);
}

std::size_t Multicomplex::rank(const MultiIndex& q) const {
  auto it = ranks_.find(q);
  return it == ranks_.end() ? 0 : it->second;
}

const SparseMatrix* Multicomplex::differential(const MultiIndex& q, int direction) const {
  auto it = differentials_.find({q, direction});
  return it == differentials_.end() ? nullptr : &it->second;
}

std::vector<MultiIndex> Multicomplex::support(int total) const {
  std::vector<MultiIndex> out;
  for (auto& q : multi_indices_of_total(directions_, total))
    if (rank(q) > 0) out.push_back(std::move(q));
  return out;
}

ChainComplex total_complex(const Multicomplex& m, const Ring& ring, int top_degree) {
  // Offsets of each summand inside the total degree.
  std::vector<std::map<MultiIndex, std::size_t>> offset(static_cast<std::size_t>(top_degree) + 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top_degree) + 1, 0);
  for (int d = 0; d <= top_degree; ++d)
    for (const auto& q : m.support(d)) {
      offset[static_cast<std::size_t>(d)][q] = ranks[static_cast<std::size_t>(d)];
      ranks[static_cast<std::size_t>(d)] += m.rank(q);
    }

  std::vector<SparseMatrix> boundaries;
  for (int d = 1; d <= top_degree; ++d) {
    std::vector<Triplet> entries;
    for (const auto& [q, col0] : offset[static_cast<std::size_t>(d)]) {
      int sign_exp = 0;
      for (int j = 0; j < m.directions(); ++j) {
        const SparseMatrix* dj = j < q.directions() && q[j] > 0 ? m.differential(q, j) : nullptr;
        if (dj) {
          const MultiIndex t = q.with(j, q[j] - 1);
          const auto it = offset[static_cast<std::size_t>(d - 1)].find(t);
          const std::size_t row0 = it == offset[static_cast<std::size_t>(d - 1)].end() ? 0 : it->second;
          const std::int64_t sign = sign_exp % 2 ? -1 : 1;
          for (std::size_t c = 0; c < dj->cols(); ++c)
            for (const auto& e : dj->column(c))
              entries.emplace_back(row0 + e.row, col0 + c, sign * e.value);
        }
        sign_exp += q[j];
      }
    }
    boundaries.push_back(SparseMatrix::from_triplets(ranks[static_cast<std::size_t>(d - 1)],
                                                     ranks[static_cast<std::size_t>(d)], entries));
  }
  ChainComplex c(ring, std::move(ranks), std::move(boundaries));
  c.check_square_zero();
  return c;
}

}  // namespace gammahom
