#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lyt/error.hpp"
#include "lyt/matrix.hpp"

namespace lyt
{

inline constexpr std::size_t kDefaultMaxViolations = 32;

/// One failed identity: which axiom, at which basis tuple, and both sides.
struct Violation
{
    std::string axiom;
    std::vector<std::size_t> indices;
    Vector lhs;
    Vector rhs;
};

struct AxiomReport
{
    bool passed = true;
    std::vector<Violation> violations;
    /// Collection reached the cap; further violations may exist.
    bool truncated = false;

    /// Appends another report's violations (respecting `cap`).
    void merge(const AxiomReport &other, std::size_t cap = kDefaultMaxViolations);
};

/// Collects violations up to a cap. Checkers poll `full()` to stop early.
class ReportBuilder
{
public:
    explicit ReportBuilder(std::size_t cap = kDefaultMaxViolations) : cap_(cap == 0 ? 1 : cap) {}

    /// Records a violation when lhs != rhs. Returns false once the cap is hit.
    bool expect_equal(const char *axiom, std::vector<std::size_t> indices, const Vector &lhs,
                      const Vector &rhs);
    void add(Violation v);
    bool full() const { return report_.violations.size() >= cap_; }
    std::size_t cap() const { return cap_; }

    AxiomReport finish() &&;

private:
    std::size_t cap_;
    AxiomReport report_;
};

/// A precondition that is itself an axiom check failed (e.g. descending along
/// a map that is not a modified Rota-Baxter operator).
class CheckFailure : public Error
{
public:
    CheckFailure(const std::string &what, AxiomReport report)
        : Error(what), report_(std::move(report))
    {
    }
    const AxiomReport &report() const { return report_; }

private:
    AxiomReport report_;
};

} // namespace lyt
