#include "stpsw/merged_system.hpp"

#include <sstream>
#include <stdexcept>

#include "stpsw/errors.hpp"
#include "stpsw/stp.hpp"

namespace stpsw {

BlockForm::BlockForm(std::size_t inputs, std::size_t states, std::size_t block_rows, std::size_t block_cols,
                     NumericMode mode)
    : inputs_(inputs),
      states_(states),
      block_rows_(block_rows),
      block_cols_(block_cols),
      mode_(mode),
      targets_(inputs * states, 0),
      blocks_(inputs * states, Matrix(block_rows, block_cols, mode)) {}

std::size_t BlockForm::slot(std::size_t gamma, std::size_t beta) const {
  if (gamma < 1 || gamma > inputs_) throw IndexError("block form: input index out of range");
  if (beta < 1 || beta > states_) throw IndexError("block form: state index out of range");
  return (gamma - 1) * states_ + (beta - 1);
}

void BlockForm::place(std::size_t gamma, std::size_t beta, std::size_t target, Matrix block) {
  if (target < 1 || target > states_) throw IndexError("block form: target out of range");
  if (block.rows() != block_rows_ || block.cols() != block_cols_)
    throw DimensionError("block form: block has wrong shape");
  std::size_t s = slot(gamma, beta);
  targets_[s] = target;
  blocks_[s] = std::move(block);
}

std::size_t BlockForm::target(std::size_t gamma, std::size_t beta) const { return targets_[slot(gamma, beta)]; }

const Matrix& BlockForm::nonzero_block(std::size_t gamma, std::size_t beta) const {
  return blocks_[slot(gamma, beta)];
}

Matrix BlockForm::block(std::size_t gamma, std::size_t alpha, std::size_t beta) const {
  if (alpha < 1 || alpha > states_) throw IndexError("block form: row block out of range");
  std::size_t s = slot(gamma, beta);
  if (targets_[s] == alpha) return blocks_[s];
  return Matrix(block_rows_, block_cols_, mode_);
}

Matrix BlockForm::flat(std::size_t gamma) const {
  check_size(block_rows_ * states_, block_cols_ * states_, "block form");
  Matrix out(block_rows_ * states_, block_cols_ * states_, mode_);
  for (std::size_t beta = 1; beta <= states_; ++beta) {
    std::size_t s = slot(gamma, beta);
    if (targets_[s] == 0) continue;
    out.set_block((targets_[s] - 1) * block_rows_, (beta - 1) * block_cols_, blocks_[s]);
  }
  return out;
}

Matrix BlockForm::flat() const {
  std::vector<Matrix> parts;
  parts.reserve(inputs_);
  for (std::size_t g = 1; g <= inputs_; ++g) parts.push_back(flat(g));
  return hconcat(parts);
}

BooleanMatrix BlockForm::compressed_pattern(std::size_t gamma) const {
  BooleanMatrix out(states_, states_);
  for (std::size_t beta = 1; beta <= states_; ++beta) {
    std::size_t s = slot(gamma, beta);
    if (targets_[s] != 0 && !blocks_[s].is_zero()) out.set(targets_[s] - 1, beta - 1, true);
  }
  return out;
}

Matrix merged_closed_form(const Matrix& stacked, const LogicalNetwork& net) {
  const std::size_t mn = net.input_states();
  Matrix xr = stp(stacked, net.signal().dense(stacked.mode()));
  Matrix lifted = kronecker(Matrix::identity(mn, stacked.mode()), xr);
  Matrix reduced = stp(lifted, power_reducing_matrix(mn).dense(stacked.mode()));
  return stp(net.transition().dense(stacked.mode()), reduced);
}

namespace {

void check_compatible(const SwitchedLinearSystem& sls, const LogicalNetwork& net) {
  if (net.signals() != sls.q()) {
    std::ostringstream os;
    os << "signal matrix has " << net.signals() << " rows but the system has " << sls.q() << " modes";
    throw DimensionError(os.str());
  }
}

MergedSystem build(MergeKind kind, const SwitchedLinearSystem& sls, const LogicalNetwork& net,
                   const MergeOptions& options) {
  check_compatible(sls, net);
  const bool dual = kind == MergeKind::Dual;
  const std::size_t n = sls.n();
  const std::size_t in_cols = dual ? sls.p() : sls.m();
  const NumericMode nm = sls.numeric_mode();
  BlockForm g(net.inputs(), net.states(), n, n, nm);
  BlockForm h(net.inputs(), net.states(), n, in_cols, nm);
  std::vector<Matrix> a_blocks, h_blocks;
  for (const Mode& md : sls.modes()) {
    a_blocks.push_back(dual ? md.a.transpose() : md.a);
    h_blocks.push_back(dual ? md.c.transpose() : md.b);
  }
  for (std::size_t gamma = 1; gamma <= net.inputs(); ++gamma)
    for (std::size_t beta = 1; beta <= net.states(); ++beta) {
      StepResult s = net.step(gamma, beta);
      g.place(gamma, beta, s.theta_next, a_blocks[s.sigma - 1]);
      h.place(gamma, beta, s.theta_next, h_blocks[s.sigma - 1]);
    }
  MergedSystem ms{kind, sls, net, std::move(g), std::move(h), false};
  if (options.closed_form_check) {
    Matrix g_closed = merged_closed_form(hconcat(a_blocks), net);
    Matrix h_closed = merged_closed_form(hconcat(h_blocks), net);
    if (!(g_closed == ms.g.flat()) || !(h_closed == ms.h.flat()))
      throw std::logic_error("closed-form and block-placement merges disagree");
    ms.closed_form_checked = true;
  }
  return ms;
}

}  // namespace

MergedSystem merge(const SwitchedLinearSystem& sls, const LogicalNetwork& net, const MergeOptions& options) {
  return build(MergeKind::Primal, sls, net, options);
}

MergedSystem merge_dual(const SwitchedLinearSystem& sls, const LogicalNetwork& net, const MergeOptions& options) {
  return build(MergeKind::Dual, sls, net, options);
}

MergedStep step_merged(const MergedSystem& ms, std::size_t gamma, std::size_t theta, const Matrix& x,
                       const Matrix& u) {
  const std::size_t n = ms.g.block_rows();
  const std::size_t w = ms.h.block_cols();
  if (x.rows() != n || x.cols() != 1) throw DimensionError("state vector has wrong dimension");
  if (u.rows() != w || u.cols() != 1) throw DimensionError("input vector has wrong dimension");
  const std::size_t big_n = ms.net.states();
  Matrix delta = Matrix::basis_vector(big_n, theta, x.mode());
  Matrix z = ms.g.flat(gamma) * kronecker(delta, x) + ms.h.flat(gamma) * kronecker(delta, u);
  MergedStep out;
  out.theta_next = ms.net.next_state(gamma, theta);
  out.x_next = z.block((out.theta_next - 1) * n, 0, n, 1);
  return out;
}

}  // namespace stpsw
