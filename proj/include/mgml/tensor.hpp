#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mgml {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& s);
std::string shape_str(const Shape& s);

namespace detail {

// One tape entry: the op kind, the saved forward value, references to the
// inputs and the rule that pulls this node's gradient into them.
struct Node {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // sized during backward, empty before
  bool requires_grad = false;
  const char* op = "leaf";
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backprop;
};

}  // namespace detail

// Dense 64-bit tensor participating in a dynamically built gradient tape.
// Operations never mutate their operands; each forward pass records a fresh
// graph that is freed when the last handle to it drops. Copying a Tensor
// copies the handle, but since derived values are immutable this is value
// semantics at the interface.
class Tensor {
 public:
  Tensor() = default;

  static Tensor constant(Shape shape, std::vector<double> values);
  static Tensor parameter(Shape shape, std::vector<double> values);
  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double v, bool requires_grad = false);
  static Tensor scalar(double v);  // constant of shape {1}

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t size() const;
  bool requires_grad() const;

  std::span<const double> values() const;
  std::vector<double> to_vector() const;
  double item() const;  // value of a single-element tensor

  // Leaf-only mutable access, used by the optimizer and finite-difference
  // probes. Throws on derived tensors: their buffers are tape state.
  std::span<double> mutable_values();

  bool has_grad() const;
  std::span<const double> grad() const;
  void clear_grad();

  std::shared_ptr<detail::Node> node() const { return node_; }

 private:
  explicit Tensor(std::shared_ptr<detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<detail::Node> node_;

  friend Tensor make_op(Shape, std::vector<double>, const char*,
                        std::vector<Tensor>, std::function<void(detail::Node&)>);
};

// --- differentiable ops ----------------------------------------------------

// a[m×k] · b[k×n] -> [m×n]; a[m×k] · b[k] -> [m].
Tensor matmul(const Tensor& a, const Tensor& b);

// Elementwise ops accept identical shapes, or a 1-D b broadcast per channel
// against a's last dimension.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);

Tensor scale(const Tensor& a, double c);
Tensor relu(const Tensor& a);
Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);

// Concatenate 1-D tensors into one 1-D tensor.
Tensor concat(std::span<const Tensor> parts);

// u·v / (max(‖u‖,eps)·max(‖v‖,eps)) for 1-D u, v of equal length.
// Zero vectors come out as similarity 0 through the eps guard.
Tensor cosine_similarity(const Tensor& u, const Tensor& v, double eps = 1e-8);

// −log softmax(logits)[target], max-subtracted for stability.
Tensor softmax_cross_entropy(const Tensor& logits, std::size_t target);

// Σ_i huber(pred_i − target_i): 0.5x² for |x|<1, |x|−0.5 otherwise.
Tensor smooth_l1(const Tensor& pred, const Tensor& target);

// Reverse-mode pass from a scalar loss. Populates grad on every
// requires_grad leaf reachable from it; fan-out gradients accumulate.
void backward(const Tensor& loss);

// Mean of a list of same-shape tensors (empty list is a contract error).
Tensor average(std::span<const Tensor> terms);

}  // namespace mgml
