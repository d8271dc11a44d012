#pragma once

#include <vector>

#include "qbarnes/errors.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Parameters (a_1..a_r; u; q) of the q-Euler-Barnes numbers. Poles are not
/// stored here; they are detected at evaluation time.
class BarnesParams {
 public:
  BarnesParams(std::vector<long> a, BigRational u, QBase q)
      : a_(std::move(a)), u_(std::move(u)), q_(std::move(q)) {
    if (a_.empty()) throw PreconditionError("a", "at least one parameter a_j is required");
    for (long aj : a_) {
      if (aj == 0) throw PreconditionError("a", "parameters a_j must be nonzero");
    }
    if (u_ == 0 || u_ == 1) throw PreconditionError("u", "u must differ from 0 and 1");
  }

  std::size_t r() const { return a_.size(); }
  const std::vector<long>& a() const { return a_; }
  const BigRational& u() const { return u_; }
  const QBase& q() const { return q_; }

  /// Same a, with u and q replaced (used for u^f, q^f in distribution relations).
  BarnesParams with(BigRational u, QBase q) const { return BarnesParams(a_, std::move(u), std::move(q)); }

 private:
  std::vector<long> a_;
  BigRational u_;
  QBase q_;
};

}  // namespace qbarnes
