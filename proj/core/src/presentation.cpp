#include "pdt/presentation.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "pdt/error.hpp"

namespace pdt {

namespace {

constexpr std::size_t kMaxSteps = 5000;

bool is_unit(const ZxPoly& f) { return f.is_constant() && !f.is_zero() && abs(f.lead()) == 1; }

bool column_zero(const ZxMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.at(i, j).is_zero()) return false;
  }
  return true;
}

std::size_t row_count(const ZxMatrix& m, std::size_t i) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) n += m.at(i, j).is_zero() ? 0 : 1;
  return n;
}

std::size_t col_count(const ZxMatrix& m, std::size_t j) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) n += m.at(i, j).is_zero() ? 0 : 1;
  return n;
}

void fail(const std::string& what) { throw Error(ErrorKind::InternalInconsistency, what); }

// f with e - f * p smaller than e, if a single step achieves that.
std::optional<ZxPoly> step_factor(const ZxPoly& e, const ZxPoly& p) {
  if (auto q = divide_exact(e, p)) return *q;
  if (e.degree() < p.degree()) return std::nullopt;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), e.lead().get_mpz_t(), p.lead().get_mpz_t());
  if (q == 0) return std::nullopt;
  return ZxPoly::monomial(q, static_cast<std::size_t>(e.degree() - p.degree()));
}

struct Key {
  long deg;
  Integer lc;
  friend bool operator<(const Key& a, const Key& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.lc < b.lc;
  }
};

}  // namespace

void apply_op(ZxMatrix& m, const PresentationOp& op) {
  using K = PresentationOp::Kind;
  const bool row_op = op.kind == K::SwapRows || op.kind == K::NegateRow || op.kind == K::AddRow;
  const std::size_t limit = row_op ? m.rows() : m.cols();
  if (op.kind != K::DropUnitPivot && (op.a >= limit || op.b >= limit)) fail("presentation op out of range");
  switch (op.kind) {
    case K::SwapRows:
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(op.a, j), m.at(op.b, j));
      break;
    case K::SwapCols:
      for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, op.a), m.at(i, op.b));
      break;
    case K::NegateRow:
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(op.a, j) = -m.at(op.a, j);
      break;
    case K::NegateCol:
      for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, op.a) = -m.at(i, op.a);
      break;
    case K::AddRow:
      if (op.a == op.b) fail("row added to itself");
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(op.a, j) += op.factor * m.at(op.b, j);
      break;
    case K::AddCol:
      if (op.a == op.b) fail("column added to itself");
      for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, op.a) += op.factor * m.at(i, op.b);
      break;
    case K::DropZeroCol:
      if (!column_zero(m, op.a)) fail("dropped column is not zero");
      m.erase_column(op.a);
      break;
    case K::DropUnitPivot:
      if (op.a >= m.rows() || op.b >= m.cols() || !is_unit(m.at(op.a, op.b)) ||
          row_count(m, op.a) != 1 || col_count(m, op.b) != 1) {
        fail("dropped pivot is not an isolated unit");
      }
      m.erase_row(op.a);
      m.erase_column(op.b);
      break;
  }
}

ModulePresentation::ModulePresentation(ZxMatrix relations) : relations_(std::move(relations)) {
  reduce();
  classify();
}

ZxMatrix ModulePresentation::replay() const {
  ZxMatrix m = relations_;
  for (const auto& op : log_) apply_op(m, op);
  return m;
}

void ModulePresentation::reduce() {
  using K = PresentationOp::Kind;
  ZxMatrix m = relations_;
  auto run = [&](PresentationOp op) {
    apply_op(m, op);
    log_.push_back(std::move(op));
  };

  for (std::size_t step = 0; step < kMaxSteps; ++step) {
    for (std::size_t j = m.cols(); j-- > 0;) {
      if (column_zero(m, j)) run({K::DropZeroCol, j, 0, {}});
    }

    std::optional<std::pair<std::size_t, std::size_t>> unit;
    for (std::size_t i = 0; i < m.rows() && !unit; ++i) {
      for (std::size_t j = 0; j < m.cols() && !unit; ++j) {
        if (is_unit(m.at(i, j))) unit = {i, j};
      }
    }
    if (unit) {
      const auto [r, c] = *unit;
      const ZxPoly s = m.at(r, c);  // s = 1/s
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j != c && !m.at(r, j).is_zero()) run({K::AddCol, j, c, -(m.at(r, j) * s)});
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i != r && !m.at(i, c).is_zero()) run({K::AddRow, i, r, -(m.at(i, c) * s)});
      }
      run({K::DropUnitPivot, r, c, {}});
      continue;
    }

    // Candidate pivots that still share their row or column, smallest first.
    std::vector<std::pair<Key, std::pair<std::size_t, std::size_t>>> pivots;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const ZxPoly& p = m.at(i, j);
        if (p.is_zero() || (row_count(m, i) == 1 && col_count(m, j) == 1)) continue;
        pivots.push_back({Key{p.degree(), abs(p.lead())}, {i, j}});
      }
    }
    std::stable_sort(pivots.begin(), pivots.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    bool progress = false;
    for (const auto& [key, rc] : pivots) {
      const auto [r, c] = rc;
      const ZxPoly p = m.at(r, c);
      for (std::size_t j = 0; j < m.cols() && !progress; ++j) {
        if (j == c || m.at(r, j).is_zero()) continue;
        if (auto f = step_factor(m.at(r, j), p)) {
          run({K::AddCol, j, c, -*f});
          progress = true;
        }
      }
      for (std::size_t i = 0; i < m.rows() && !progress; ++i) {
        if (i == r || m.at(i, c).is_zero()) continue;
        if (auto f = step_factor(m.at(i, c), p)) {
          run({K::AddRow, i, r, -*f});
          progress = true;
        }
      }
      if (progress) break;
    }
    if (!progress) break;
  }

  // Normalize isolated entries to the positive cone.
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (row_count(m, i) == 1 && col_count(m, j) == 1 && order_sign(m.at(i, j)) == OrderSign::Negative) {
        run({K::NegateCol, j, 0, {}});
      }
    }
  }
  reduced_ = std::move(m);
}

void ModulePresentation::classify() {
  const ZxMatrix& m = reduced_;
  recognized_ = true;
  free_rank_ = 0;
  torsion_.clear();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t n = row_count(m, i);
    if (n == 0) {
      ++free_rank_;
    } else if (n > 1) {
      recognized_ = false;
    } else {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero()) continue;
        if (col_count(m, j) != 1) recognized_ = false;
        torsion_.push_back(m.at(i, j));
      }
    }
  }
  if (!recognized_) {
    torsion_.clear();
    free_rank_ = 0;
    shape_ = "unrecognized";
    return;
  }
  std::sort(torsion_.begin(), torsion_.end(),
            [](const ZxPoly& a, const ZxPoly& b) { return compare(a, b) == Comparison::Less; });
  std::vector<std::string> parts;
  if (free_rank_ > 0) parts.push_back("free^" + std::to_string(free_rank_));
  for (const auto& p : torsion_) parts.push_back("Z[x]/(" + p.to_string() + ")");
  if (parts.empty()) {
    shape_ = "0";
    return;
  }
  shape_ = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) shape_ += " ⊕ " + parts[k];
}

}  // namespace pdt
