#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace dmr {

/// Dense topics x features parameter matrix, row-major.
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  LambdaMatrix(int topics, int features)
      : topics_(topics), features_(features),
        data_(static_cast<std::size_t>(topics) * static_cast<std::size_t>(features), 0.0) {
    if (topics < 1 || features < 1) {
      throw std::invalid_argument("lambda matrix dimensions must be positive");
    }
  }

  int topics() const { return topics_; }
  int features() const { return features_; }

  double& at(int t, int k) { return data_[index(t, k)]; }
  double at(int t, int k) const { return data_[index(t, k)]; }

  std::span<double> row(int t) {
    return std::span<double>(data_).subspan(index(t, 0), static_cast<std::size_t>(features_));
  }
  std::span<const double> row(int t) const {
    return std::span<const double>(data_).subspan(index(t, 0), static_cast<std::size_t>(features_));
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(int t, int k) const {
    return static_cast<std::size_t>(t) * static_cast<std::size_t>(features_) +
           static_cast<std::size_t>(k);
  }

  int topics_ = 0;
  int features_ = 0;
  std::vector<double> data_;
};

}  // namespace dmr
