#include "lyt/report.hpp"

namespace lyt
{

void AxiomReport::merge(const AxiomReport &other, std::size_t cap)
{
    for (const auto &v : other.violations) {
        if (violations.size() >= cap) {
            truncated = true;
            break;
        }
        violations.push_back(v);
    }
    truncated = truncated || other.truncated;
    passed = violations.empty();
}

bool ReportBuilder::expect_equal(const char *axiom, std::vector<std::size_t> indices,
                                 const Vector &lhs, const Vector &rhs)
{
    if (lhs == rhs)
        return true;
    add(Violation{axiom, std::move(indices), lhs, rhs});
    return !full();
}

void ReportBuilder::add(Violation v)
{
    if (full()) {
        report_.truncated = true;
        return;
    }
    report_.violations.push_back(std::move(v));
    if (full())
        report_.truncated = true;
}

AxiomReport ReportBuilder::finish() &&
{
    report_.passed = report_.violations.empty();
    return std::move(report_);
}

} // namespace lyt
