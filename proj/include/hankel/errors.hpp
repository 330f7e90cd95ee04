#pragma once

#include <stdexcept>

namespace hankel {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { yes, no, budget_exceeded };
const char* to_string(Verdict v);

}  // namespace hankel
