#include "cookie/discrete.h"

#include <sstream>

#include "cookie/oracle.h"

namespace cookie {

void require_valid(const DiscreteInstance& d) {
  std::ostringstream err;
  auto nonneg_int = [&](const Number& n, const char* what) {
    if (!n.is_integer() || n.sign() < 0) err << ' ' << what << " must be a non-negative integer;";
  };
  nonneg_int(d.r, "income");
  nonneg_int(d.M, "goal");
  if (d.M.sign() == 0) err << " goal must be positive;";
  if (d.T < 0) err << " deadline must be >= 0;";
  for (std::size_t i = 0; i < d.items.size(); ++i) {
    const Item& it = d.items[i];
    if (!it.x.is_integer() || it.x.sign() <= 0) err << " item " << i << ": x must be a positive integer;";
    if (!it.y.is_integer() || it.y.sign() <= 0) err << " item " << i << ": y must be a positive integer;";
    if (!it.alpha.is_integer() || it.alpha < Number(1))
      err << " item " << i << ": alpha must be an integer >= 1;";
  }
  if (!err.str().empty()) throw InvalidInstance("invalid discrete instance:" + err.str());
}

DiscreteOutcome simulate_discrete(const DiscreteInstance& d, const Schedule& s) {
  require_valid(d);
  if (static_cast<std::int64_t>(s.steps.size()) > d.T) throw InputError("schedule is longer than the deadline");
  std::vector<std::size_t> counts(d.items.size(), 0);
  Number cookies = Number::exact(0);
  Number income = d.r;
  DiscreteOutcome out;
  for (std::int64_t t = 0; t < d.T; ++t) {
    cookies += income;
    if (static_cast<std::size_t>(t) >= s.steps.size()) continue;
    for (std::size_t idx : s.steps[static_cast<std::size_t>(t)]) {
      if (idx >= d.items.size()) throw InputError("schedule item index out of range");
      Number price = current_cost(d.items[idx], counts[idx]);
      if (cookies < price) {
        out.feasible = false;
        continue;
      }
      cookies -= price;
      income += d.items[idx].x;
      ++counts[idx];
    }
  }
  out.cookies_at_T = cookies;
  return out;
}

bool decide_discrete(const DiscreteInstance& d, std::size_t budget) {
  return brute_force_discrete(d, budget).yes;
}

}  // namespace cookie
