#include "workbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

namespace workbench {

void Report::add(Check c) { checks_.push_back(std::move(c)); }

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

const Check& Report::at(std::string_view id) const {
  const Check* c = find(id);
  if (!c) throw std::out_of_range("no check named " + std::string(id));
  return *c;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks_) m = std::max(m, c.max_residual);
  return m;
}

void require(const Report& r, std::string_view context) {
  const Check* f = r.first_failure();
  if (!f) return;
  std::ostringstream os;
  os << context << ": check " << f->id << " failed (residual " << f->max_residual << ")";
  if (f->witness) {
    os << " at (";
    for (std::size_t i = 0; i < f->witness->size(); ++i) os << (i ? "," : "") << (*f->witness)[i];
    os << ")";
  }
  throw VerificationError(os.str(), r);
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WORKBENCH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return n;
}

namespace {

struct Partial {
  double max = 0.0;
  std::size_t first_fail = std::numeric_limits<std::size_t>::max();
};

void decode(std::size_t idx, const std::vector<std::size_t>& radices, Tuple& out) {
  for (std::size_t k = radices.size(); k-- > 0;) {
    out[k] = idx % radices[k];
    idx /= radices[k];
  }
}

Partial run_range(std::size_t lo, std::size_t hi, const std::vector<std::size_t>& radices,
                  double tol, const ResidualFn& fn) {
  Partial p;
  Tuple t(radices.size());
  for (std::size_t i = lo; i < hi; ++i) {
    decode(i, radices, t);
    double r = fn(t);
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    p.max = std::max(p.max, r);
    if (r > tol && p.first_fail == std::numeric_limits<std::size_t>::max()) p.first_fail = i;
  }
  return p;
}

}  // namespace

Check sweep(std::string id, std::string law, const std::vector<std::size_t>& radices,
            double tol, const ResidualFn& fn) {
  std::size_t total = 1;
  for (auto r : radices) total *= r;

  std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, total / 64));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = run_range(0, total, radices, tol, fn);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t lo = std::min(total, w * chunk), hi = std::min(total, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { parts[w] = run_range(lo, hi, radices, tol, fn); });
    }
    for (auto& th : pool) th.join();
  }

  Check c{std::move(id), std::move(law), 0.0, std::nullopt, true};
  std::size_t first = std::numeric_limits<std::size_t>::max();
  for (const auto& p : parts) {
    c.max_residual = std::max(c.max_residual, p.max);
    first = std::min(first, p.first_fail);
  }
  if (first != std::numeric_limits<std::size_t>::max()) {
    c.pass = false;
    Tuple t(radices.size());
    decode(first, radices, t);
    c.witness = t;
  }
  return c;
}

Check single(std::string id, std::string law, double res, double tol) {
  if (std::isnan(res)) res = std::numeric_limits<double>::infinity();
  return Check{std::move(id), std::move(law), res, std::nullopt, res <= tol};
}

}  // namespace workbench
