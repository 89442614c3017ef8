#pragma once

#include <Eigen/Dense>

#include "pielm/features.hpp"
#include "pielm/geometry.hpp"
#include "pielm/problems.hpp"

namespace pielm {

/// Row offsets of the stacked blocks: [f | g | h-or-k].
struct BlockRows {
  Eigen::Index interior = 0;  // start of the PDE rows (always 0)
  Eigen::Index value = 0;     // start of the u = g rows
  Eigen::Index second = 0;    // start of the h (Dirichlet) or k (Navier) rows
  Eigen::Index end = 0;
};

/// Optional per-block row scaling; unit weights reproduce the plain
/// collocation system.
struct BlockWeights {
  double interior = 1.0;
  double value = 1.0;
  double second = 1.0;
};

struct AssembledSystem {
  Eigen::MatrixXd H;
  Eigen::VectorXd S;
  BlockRows blocks;
  BoundaryRegime regime = BoundaryRegime::Dirichlet;
};

/// Stacks H = [H_f; H_g; H_h|H_k] and the matching data S. Row q of each
/// block corresponds to row q of the interior or boundary collocation set.
AssembledSystem assemble(const HiddenLayer& layer, const CollocationSet& colloc,
                         const ProblemSpec& problem, BoundaryRegime regime,
                         const BlockWeights& weights = {});

}  // namespace pielm
