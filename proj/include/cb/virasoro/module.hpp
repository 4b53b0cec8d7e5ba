#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cb/exact/elimination.hpp"
#include "cb/virasoro/minimal.hpp"
#include "cb/virasoro/verma.hpp"

namespace cb {

// Positive-energy Virasoro module graded by depth, built lazily depth by depth.
class GradedModule {
 public:
  GradedModule();
  virtual ~GradedModule() = default;
  GradedModule(const GradedModule&) = delete;
  GradedModule& operator=(const GradedModule&) = delete;

  int id() const { return id_; }
  virtual std::string label() const = 0;
  virtual Q c() const = 0;
  virtual Q h() const = 0;
  virtual int dim(int depth) = 0;

  // Matrix of T(n) from depth d to depth d - n (cached).
  const Mat& vir(int n, int depth);
  std::vector<int> graded_dims(int max_depth);

 protected:
  virtual Mat compute_vir(int n, int depth) = 0;

 private:
  int id_;
  std::recursive_mutex mu_;
  std::map<std::pair<int, int>, Mat> vir_cache_;
};

using ModulePtr = std::shared_ptr<GradedModule>;

class VermaModule : public GradedModule {
 public:
  VermaModule(Q c, Q h, int min_part = 1) : verma_(std::move(c), std::move(h), min_part) {}
  std::string label() const override;
  Q c() const override { return verma_.c(); }
  Q h() const override { return verma_.h(); }
  int dim(int depth) override { return verma_.dim(depth); }
  Verma& verma() { return verma_; }

 protected:
  Mat compute_vir(int n, int depth) override { return verma_.matrix(n, depth); }

 private:
  Verma verma_;
};

// L(c,h): Verma classes modulo the radical of the contravariant form, depth by depth.
// The basis at each depth is the set of non-pivot partitions of the radical's echelon form.
class SimpleModule : public GradedModule {
 public:
  SimpleModule(Q c, Q h, int min_part = 1);
  SimpleModule(const MinimalLabel& label);

  std::string label() const override;
  Q c() const override { return verma_.c(); }
  Q h() const override { return verma_.h(); }
  int dim(int depth) override;
  Verma& verma() { return verma_; }
  const std::optional<MinimalLabel>& minimal_label() const { return label_; }
  void set_minimal_label(const MinimalLabel& l) { label_ = l; }

  const QuotientBasis& radical(int depth);
  std::vector<Partition> basis(int depth);
  // Verma coordinates -> coordinates in L at the same depth.
  Vec reduce(int depth, const Vec& verma_vec);
  Vec reduce(const Terms& t, int depth);
  // Coordinates in L -> Verma coordinates supported on basis partitions.
  Vec lift(int depth, const Vec& coords);
  Terms lift_terms(int depth, const Vec& coords);

 protected:
  Mat compute_vir(int n, int depth) override;

 private:
  Verma verma_;
  std::optional<MinimalLabel> label_;
  std::recursive_mutex mu_;
  std::map<int, QuotientBasis> radical_;
};

// D(M): graded dual with T(n) acting as the transpose of T(-n).
class ContragredientModule : public GradedModule {
 public:
  explicit ContragredientModule(ModulePtr base) : base_(std::move(base)) {}
  std::string label() const override { return base_->label() + "*"; }
  Q c() const override { return base_->c(); }
  Q h() const override { return base_->h(); }
  int dim(int depth) override { return base_->dim(depth); }
  const ModulePtr& base() const { return base_; }

 protected:
  Mat compute_vir(int n, int depth) override { return base_->vir(-n, depth - n).transpose(); }

 private:
  ModulePtr base_;
};

// Shared instances so that caches are reused across computations.
std::shared_ptr<SimpleModule> simple_module(const Q& c, const Q& h, int min_part = 1);
std::shared_ptr<SimpleModule> simple_module(const MinimalLabel& label);
std::shared_ptr<SimpleModule> vacuum_module(const Q& c);
std::shared_ptr<ContragredientModule> dual_module(const ModulePtr& m);

// "p/q/r/s", "c=...,h=..." or either followed by '*' for the contragredient module.
ModulePtr parse_module(const std::string& descriptor);

}  // namespace cb
