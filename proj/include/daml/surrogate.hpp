#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "daml/model.hpp"

namespace daml {

// Layer sizes of the residual surrogate
//   y = x + conv4(relu(conv3(relu([conv2a(z), conv2b(z) * conv2c(z)])))),
//   z = batchnorm(x),
// with circular padding everywhere. bilinear_filters == 0 selects the
// degenerate identity network (batch-norm affine only, f_nn = 0).
struct Architecture {
  int bilinear_filters = 24;
  int hidden_filters = 37;
  int kernel2 = 5;
  int kernel3 = 5;
  int kernel4 = 1;

  bool identity_only() const { return bilinear_filters == 0; }
  void validate() const;
  bool operator==(const Architecture&) const = default;

  static Architecture identity() { return {0, 0, 1, 1, 1}; }
};

enum class Mode { kTrain, kInfer };
enum class Precision { kDouble, kSingle };

inline constexpr double kBatchNormEps = 1e-3;

struct ParamGroup {
  std::string name;
  Eigen::Index offset = 0;
  Eigen::Index size = 0;
  Eigen::Index rows = 0;  // column-major block shape
  Eigen::Index cols = 0;
};

// Canonical order of the trainable values:
//   bn.scale, bn.shift, conv2a.w, conv2a.b, conv2b.w, conv2b.b, conv2c.w,
//   conv2c.b, conv3.w, conv3.b, conv4.w, conv4.b
// conv2x.w is filters x taps; conv3.w is filters x (taps * 2F) with column
// tap * 2F + channel; conv4.w is 1 x (taps * H), same convention.
std::vector<ParamGroup> param_layout(const Architecture& arch);

struct NetworkParameters {
  Architecture arch;
  Eigen::VectorXd values;      // trainable, canonical order
  double running_mean = 0.0;   // batch-norm running statistics
  double running_var = 1.0;

  ParamGroup group(const std::string& name) const;
  Eigen::Map<const Eigen::MatrixXd> view(const std::string& name) const;
  Eigen::Map<Eigen::MatrixXd> view(const std::string& name);
};

/// Trainable parameter count (9389 for the default architecture).
std::size_t param_count(const Architecture& arch);
inline std::size_t param_count(const NetworkParameters& p) { return param_count(p.arch); }

/// Glorot-uniform kernels, zero biases, unit batch-norm scale.
NetworkParameters init_parameters(const Architecture& arch, std::uint64_t seed);

/// Batch statistics measured by one train-mode application.
struct BatchStats {
  double mean = 0.0;
  double var = 1.0;
};

class NonFiniteActivation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the network to every column of x (m x B). In train mode the
/// batch-norm uses statistics over the whole batch and grid; stats (if not
/// null) receives them.
Eigen::MatrixXd forward(const NetworkParameters& params, const Eigen::MatrixXd& x, Mode mode,
                        BatchStats* stats = nullptr);

/// Single-state infer-mode convenience.
Eigen::VectorXd forward(const NetworkParameters& params, const Eigen::VectorXd& x);

/// Infer-mode Jacobian of forward at x applied to every column of dirs.
Eigen::MatrixXd forward_tangent(const NetworkParameters& params, const Eigen::VectorXd& x,
                                const Eigen::MatrixXd& dirs);

struct TrainingBatch {
  Eigen::MatrixXd inputs;                // m x B
  std::vector<Eigen::MatrixXd> targets;  // N_f entries of m x B; entry i-1 is lead i
  std::vector<Eigen::MatrixXd> weights;  // same shapes, nonnegative

  int lead() const { return static_cast<int>(targets.size()); }
  void validate() const;
};

struct LossOptions {
  Mode mode = Mode::kTrain;
  double l2 = 1e-4;  // on conv4 kernel values
  Precision precision = Precision::kDouble;
};

/// Sum over samples and leads of sum_n w_n (G^(i)(x)_n - target_n)^2 plus the
/// conv4 L2 penalty.
double loss(const NetworkParameters& params, const TrainingBatch& batch, const LossOptions& opt = {});

struct Gradient {
  double loss = 0.0;
  Eigen::VectorXd values;           // canonical order
  std::vector<BatchStats> stats;    // one per application (train mode)
};

/// Exact reverse-mode gradient of loss() with respect to the trainable values.
Gradient backward(const NetworkParameters& params, const TrainingBatch& batch, const LossOptions& opt = {});

struct OptimizerState {
  Eigen::VectorXd accumulator;
  double lr = 0.01;
  double eps = 1e-7;
};

OptimizerState make_optimizer(const NetworkParameters& params, double lr = 0.01, double eps = 1e-7);

/// acc += g^2; p -= lr g / (sqrt(acc) + eps).
void adagrad_step(NetworkParameters& params, const Eigen::VectorXd& grad, OptimizerState& opt);

// Training pairs drawn from a state series (m x T) with per-entry loss
// weights of the same shape. Sample s uses input column s and targets
// s+1..s+N_f, weighted by the weights at the target columns.
struct TrainingData {
  const Eigen::MatrixXd* states = nullptr;
  const Eigen::MatrixXd* weights = nullptr;
};

struct TrainOptions {
  int epochs = 20;
  int lead = 1;
  int batch_size = 256;
  double lr = 0.01;
  double eps = 1e-7;
  double l2 = 1e-4;
  double momentum = 0.99;  // batch-norm running statistics
  std::uint64_t seed = 0;
  double holdout_fraction = 0.0;  // trailing fraction kept out of training
  Precision precision = Precision::kSingle;
};

struct EpochLog {
  int epoch = 0;
  double mean_loss = 0.0;       // training loss per sample
  double holdout_loss = 0.0;    // infer-mode loss per sample on the holdout (0 if none)
  double wall_seconds = 0.0;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shuffled mini-batch Adagrad. Epoch 0 of the returned log is the
/// pre-training evaluation; entries 1..epochs follow each pass.
std::vector<EpochLog> train(NetworkParameters& params, const TrainingData& data, const TrainOptions& opt,
                            const std::function<void(const EpochLog&)>& on_epoch = {});

/// Builds the batch for the given sample indices.
TrainingBatch make_batch(const TrainingData& data, const std::vector<int>& samples, int lead);

class SurrogateModel final : public Model {
 public:
  explicit SurrogateModel(NetworkParameters params, int m);

  int dim() const override { return m_; }
  void advance(Eigen::Ref<Eigen::MatrixXd> states) const override;
  Eigen::MatrixXd tangent(const Eigen::VectorXd& x, const Eigen::MatrixXd& dirs) const override;
  std::string name() const override { return "surrogate"; }

  const NetworkParameters& params() const { return params_; }

 private:
  NetworkParameters params_;
  int m_;
};

void write_network(const std::string& path, const NetworkParameters& params);
/// Refuses to load when expected is given and does not match the file.
NetworkParameters read_network(const std::string& path, const Architecture* expected = nullptr);
void write_training_log(const std::string& path, const std::vector<EpochLog>& log);

}  // namespace daml
