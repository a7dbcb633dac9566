#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "gleo/tensor.h"

namespace gleo::ad {

/// Reverse-mode autodiff over Tensor values. Graphs are built dynamically by
/// the op functions below and torn down when the Vars go out of scope. Nodes
/// whose inputs carry no gradient keep neither parents nor a backprop closure,
/// so pure inference builds no tape.
class Node {
 public:
  Tensor value;
  Tensor grad;  // allocated on demand, same shape as value
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void()> backprop;

  explicit Node(Tensor v) : value(std::move(v)) {}

  void ensure_grad() {
    if (grad.empty()) grad = Tensor::zeros(value.shape());
  }
};

using Var = std::shared_ptr<Node>;

/// Graph input without gradient tracking.
Var constant(Tensor v);
/// Trainable leaf; accumulates into .grad during backward().
Var parameter(Tensor v);

/// Backpropagate from a scalar (shape {1}) root. Seeds d(root)/d(root) = 1 and
/// runs the tape in reverse topological order. Gradients accumulate; call
/// zero_grad on leaves (the optimizer does) between steps.
void backward(const Var& root);

// ---- elementwise / scalar ----
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var div(const Var& a, const Var& b);
/// k*a + c, elementwise with scalar constants.
Var affine(const Var& a, double k, double c);
Var relu(const Var& a);
Var sigmoid(const Var& a);
Var sum_all(const Var& a);   // -> {1}
Var mean_all(const Var& a);  // -> {1}

// ---- shape / indexing ----
/// {H,W} dense map -> {64, H/8, W/8} grid tensor (invertible index remap).
Var to_grid(const Var& map);
/// Gather entries of an {h,w} matrix at (row,col) positions -> {N}.
Var gather_rc(const Var& m, std::vector<std::pair<int, int>> rc);
/// Gather pixels of an {H,W} map at (x,y) positions -> {N}.
Var gather_xy(const Var& m, std::vector<std::pair<int, int>> xy);
/// Concatenate along channel axis: {Ca,H,W} + {Cb,H,W} -> {Ca+Cb,H,W}.
Var concat_channels(const Var& a, const Var& b);

// ---- reductions over the 64-axis of grid tensors ----
Var max_cells(const Var& g);   // {64,h,w} -> {h,w}, subgradient to the argmax
Var mean_cells(const Var& g);  // {64,h,w} -> {h,w}

// ---- distribution ops ----
/// Per-cell softmax over the leading 64-axis, max-stabilized.
Var softmax_cells(const Var& g);
/// -sum_k(p log q + s2 * q log p) per cell -> {h,w}; 0*log 0 := 0.
Var cross_entropy_cells(const Var& p, const Var& q, double s2 = 1.0);
/// -sum_k(p log p + s2 * q log q) per cell -> {h,w}; 0*log 0 := 0.
Var entropy_cells(const Var& p, const Var& q, double s2 = 1.0);

// ---- spatial ops ----
/// Resample an {H,W} map: out(y,x) = bilinear(in, M_out_to_in * (x,y,1)).
/// Out-of-bounds samples read 0. Differentiable w.r.t. the map only.
Var warp(const Var& map, const Eigen::Matrix3d& m_out_to_in, int out_h, int out_w);
/// Bilinear resize of {C,H,W} (half-pixel-center convention, edges clamped).
Var upsample_bilinear(const Var& x, int out_h, int out_w);

// ---- nn ops ----
/// x {Cin,H,W}, w {Cout,Cin,kh,kw}, b {Cout}; zero padding.
Var conv2d(const Var& x, const Var& w, const Var& b, int stride, int pad);
Var maxpool2(const Var& x);  // 2x2 stride-2
/// Per-channel normalization over H*W with affine gamma/beta ({C} each).
Var instance_norm(const Var& x, const Var& gamma, const Var& beta,
                  double eps = 1e-5);

}  // namespace gleo::ad
