#include "monoideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <unordered_map>

#include "monoideal/errors.hpp"
#include "monoideal/linalg.hpp"

namespace monoideal {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t count) {
  if (count == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = count;
  }
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = -1;
  for (const auto& [key, v] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(projective_dimension() + 1), 0);
  for (const auto& [key, v] : entries_) out[static_cast<std::size_t>(key.first)] += v;
  return out;
}

namespace {

void require_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw PreconditionError("Betti numbers need homogeneous generators");
}

bool is_unit_ideal(const Ideal& ideal) { return ideal.groebner()->is_unit(); }

MonomialIdeal initial_ideal(const Ideal& ideal) {
  return MonomialIdeal(ideal.ring_ptr(), ideal.groebner()->leads);
}

struct Entry {
  std::size_t row;
  Scalar value;
};

// Multiplication by one variable from degree d into degree d + 1, one
// sparse column per basis monomial of degree d.
using MultMap = std::vector<std::vector<Entry>>;

std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  }
  return out;
}

struct Strands {
  std::size_t n;
  FieldSpec field;
  std::vector<GradedPieceBasis> pieces;
  std::vector<std::vector<MultMap>> mult;  // mult[var][d]

  std::size_t piece_size(int d) const {
    return d < 0 || static_cast<std::size_t>(d) >= pieces.size() ? 0 : pieces[static_cast<std::size_t>(d)].basis.size();
  }

  // Rank of d_{i,j}: K_{i,j} -> K_{i-1,j}, with K_{i,j} = wedge^i k^n (x) (R/I)_{j-i}.
  std::size_t differential_rank(std::size_t i, int j) const {
    if (i == 0 || i > n) return 0;
    const int src_deg = j - static_cast<int>(i);
    const std::size_t src = piece_size(src_deg);
    const std::size_t dst = piece_size(src_deg + 1);
    if (src == 0 || dst == 0) return 0;
    const auto src_sets = subsets_of_size(n, i);
    const auto dst_sets = subsets_of_size(n, i - 1);
    std::unordered_map<std::uint32_t, std::size_t> dst_index;
    for (std::size_t k = 0; k < dst_sets.size(); ++k) dst_index[dst_sets[k]] = k;

    Matrix m(dst_sets.size() * dst, src_sets.size() * src);
    for (std::size_t a = 0; a < src_sets.size(); ++a) {
      const std::uint32_t s = src_sets[a];
      int position = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if ((s & (std::uint32_t{1} << v)) == 0) continue;
        const bool negate = (position++ % 2) == 1;
        const std::size_t block = dst_index.at(s & ~(std::uint32_t{1} << v));
        const MultMap& mm = mult[v][static_cast<std::size_t>(src_deg)];
        for (std::size_t u = 0; u < src; ++u) {
          for (const auto& e : mm[u]) {
            m.at(block * dst + e.row, a * src + u) = negate ? field.neg(e.value) : e.value;
          }
        }
      }
    }
    return rank(m, field);
  }
};

}  // namespace

std::vector<GradedPieceBasis> graded_pieces(const Ideal& ideal, unsigned max_degree) {
  require_homogeneous(ideal);
  std::vector<GradedPieceBasis> out;
  if (is_unit_ideal(ideal)) {
    for (unsigned d = 0; d <= max_degree; ++d) out.push_back({d, {}});
    return out;
  }
  MonomialIdeal in = initial_ideal(ideal);
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back({d, standard_monomials(in, d)});
  return out;
}

int top_degree(const Ideal& ideal) {
  require_homogeneous(ideal);
  if (is_unit_ideal(ideal)) return -1;
  return static_cast<int>(power_gap(initial_ideal(ideal))) - 1;
}

BettiTable graded_betti(const Ideal& ideal, std::optional<unsigned> max_degree) {
  require_homogeneous(ideal);
  const std::size_t n = ideal.ring().arity();
  BettiTable table(n);
  if (is_unit_ideal(ideal)) return table;
  if (ideal.is_zero()) {
    table.set(0, 0, 1);
    return table;
  }
  MonomialIdeal in = initial_ideal(ideal);
  if (!max_degree && !is_artinian(in)) {
    throw PreconditionError("R/I is not Artinian; a maximum degree is required");
  }
  const unsigned top_j = max_degree ? *max_degree : power_gap(in) - 1 + static_cast<unsigned>(n);

  Strands st{n, ideal.ring().field(), graded_pieces(ideal, top_j), {}};
  Arith arith = ideal.ring().arith();
  const Scalar one = st.field.one();
  st.mult.assign(n, std::vector<MultMap>(top_j));
  for (unsigned d = 0; d < top_j; ++d) {
    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> next_index;
    const auto& next = st.pieces[d + 1].basis;
    for (std::size_t k = 0; k < next.size(); ++k) next_index[next[k]] = k;
    for (std::size_t v = 0; v < n; ++v) {
      MultMap& mm = st.mult[v][d];
      for (const auto& u : st.pieces[d].basis) {
        Polynomial r = normal_form(arith.monomial(one, u * ExponentVector::variable(v)), ideal);
        std::vector<Entry> col;
        for (const auto& t : r.terms()) col.push_back({next_index.at(t.mono), t.coeff});
        mm.push_back(std::move(col));
      }
    }
  }

  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  for (unsigned j = 0; j <= top_j; ++j) {
    jobs.push_back(std::async(std::launch::async, [&st, j, n] {
      std::vector<std::size_t> ranks(n + 2, 0);
      for (std::size_t i = 1; i <= n; ++i) ranks[i] = st.differential_rank(i, static_cast<int>(j));
      std::vector<std::uint64_t> betti(n + 1, 0);
      for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t dim = subsets_of_size(n, i).size() * st.piece_size(static_cast<int>(j) - static_cast<int>(i));
        betti[i] = dim - ranks[i] - ranks[i + 1];
      }
      return betti;
    }));
  }
  for (unsigned j = 0; j <= top_j; ++j) {
    const auto betti = jobs[j].get();
    for (std::size_t i = 0; i <= n; ++i) table.set(static_cast<int>(i), static_cast<int>(j), betti[i]);
  }
  return table;
}

BettiTable graded_betti(const MonomialIdeal& m, std::optional<unsigned> max_degree) {
  return graded_betti(m.to_ideal(), max_degree);
}

int regularity(const BettiTable& table) { return table.regularity(); }

std::vector<int> socle_degrees(const BettiTable& table) {
  const int n = static_cast<int>(table.n_vars());
  std::vector<int> out;
  for (const auto& [key, v] : table.entries()) {
    if (key.first != n) continue;
    for (std::uint64_t k = 0; k < v; ++k) out.push_back(key.second - n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_level(const BettiTable& table) {
  const int n = static_cast<int>(table.n_vars());
  int count = 0;
  for (const auto& [key, v] : table.entries()) count += key.first == n ? 1 : 0;
  return count == 1;
}

std::string format_table(const BettiTable& table) {
  const int pd = table.projective_dimension();
  const int reg = table.regularity();
  if (pd < 0) return "total:\n";
  const auto totals = table.totals();

  std::vector<std::vector<std::string>> rows;  // rows[0] header, rows[1] totals, then degrees
  std::vector<std::string> labels{"", "total:"};
  rows.emplace_back();
  rows.emplace_back();
  for (int i = 0; i <= pd; ++i) {
    rows[0].push_back(std::to_string(i));
    rows[1].push_back(std::to_string(totals[static_cast<std::size_t>(i)]));
  }
  for (int d = 0; d <= reg; ++d) {
    labels.push_back(std::to_string(d) + ":");
    std::vector<std::string> row;
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = table.at(i, i + d);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    rows.push_back(std::move(row));
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(pd + 1), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += std::string(label_width - labels[r].size(), ' ') + labels[r];
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out += ' ';
      out += std::string(widths[c] - rows[r][c].size(), ' ') + rows[r][c];
    }
    out += '\n';
  }
  return out;
}

std::string format_records(const BettiTable& table) {
  std::string out;
  for (const auto& [key, v] : table.entries()) {
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace monoideal
