#ifndef PDT_PRESENTATION_HPP
#define PDT_PRESENTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pdt/zx_matrix.hpp"

namespace pdt {

/// One step of the reduction log. Every step preserves the cokernel.
struct PresentationOp {
  enum class Kind {
    SwapRows,
    SwapCols,
    NegateRow,
    NegateCol,
    AddRow,         // row a += factor * row b
    AddCol,         // col a += factor * col b
    DropZeroCol,    // col a is zero
    DropUnitPivot,  // entry (a, b) is +-1 and alone in its row and column
  };
  Kind kind;
  std::size_t a = 0;
  std::size_t b = 0;
  ZxPoly factor;

  friend bool operator==(const PresentationOp&, const PresentationOp&) = default;
};

/// Applies one op in place; throws InternalInconsistency when its
/// precondition fails.
void apply_op(ZxMatrix& m, const PresentationOp& op);

/*
 * ModulePresentation: the cokernel of a relation matrix with one row per
 * generator and one column per relation.
 *
 * reduce() pivots on unit entries and otherwise clears rows and columns
 * with exact quotients and leading-term Euclidean steps. There is no
 * normal form over Z[x], so the shape is reported only when the reduced
 * matrix has at most one nonzero entry per row and per column.
 */
class ModulePresentation {
 public:
  ModulePresentation() = default;
  explicit ModulePresentation(ZxMatrix relations);

  std::size_t gens() const noexcept { return relations_.rows(); }
  const ZxMatrix& relations() const noexcept { return relations_; }
  const ZxMatrix& reduced() const noexcept { return reduced_; }
  const std::vector<PresentationOp>& log() const noexcept { return log_; }

  /// "0", "free^r", "Z[x]/(p)" joined by " ⊕ ", or "unrecognized".
  const std::string& shape() const noexcept { return shape_; }
  bool recognized() const noexcept { return recognized_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  /// Orders p of the cyclic torsion summands.
  const std::vector<ZxPoly>& torsion() const noexcept { return torsion_; }

  /// Replays the log on relations().
  ZxMatrix replay() const;

 private:
  void reduce();
  void classify();

  ZxMatrix relations_;
  ZxMatrix reduced_;
  std::vector<PresentationOp> log_;
  std::string shape_ = "0";
  bool recognized_ = true;
  std::size_t free_rank_ = 0;
  std::vector<ZxPoly> torsion_;
};

}  // namespace pdt

#endif  // PDT_PRESENTATION_HPP
