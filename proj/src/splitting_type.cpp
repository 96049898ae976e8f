#include "hncalc/splitting_type.hpp"

#include <utility>

namespace hncalc {

SplittingType::SplittingType(std::vector<Integer> multiplicities)
    : a_(std::move(multiplicities))
{
    for (const auto& m : a_)
        if (m < 0)
            throw DomainError("SplittingType: multiplicities must be nonnegative");
    while (!a_.empty() && a_.back() == 0)
        a_.pop_back();
}

const Integer& SplittingType::multiplicity(long j) const
{
    static const Integer zero = 0;
    if (j < 0 || j >= static_cast<long>(a_.size()))
        return zero;
    return a_[static_cast<std::size_t>(j)];
}

Integer SplittingType::total_rank() const
{
    Integer total = 0;
    for (const auto& m : a_)
        total += m;
    return total;
}

std::string bundle_string(const SplittingType& st)
{
    std::string out;
    for (long j = 0; j <= st.max_degree_index(); ++j) {
        const Integer& a = st.multiplicity(j);
        if (a == 0)
            continue;
        if (!out.empty())
            out += " ⊕ "; // ⊕
        if (j == 0)
            out += "O";
        else
            out += "O(−" + std::to_string(j) + ")"; // O(−j)
        if (a > 1)
            out += "^" + a.get_str();
    }
    return out.empty() ? std::string("0") : out;
}

} // namespace hncalc
