#include "iasi/sumset.hpp"

#include "iasi/errors.hpp"

#include <algorithm>
#include <limits>

namespace iasi {

namespace {

void require_nonempty(const IntegerSet& s, const char* what)
{
    if (s.empty())
        throw InvalidArgument(std::string(what) + ": operand set is empty");
}

} // namespace

Value checked_add(Value a, Value b)
{
    if (a > std::numeric_limits<Value>::max() - b)
        throw OverflowError("sum " + std::to_string(a) + " + " + std::to_string(b) + " exceeds 64 bits");
    return a + b;
}

Value checked_mul(Value a, Value b)
{
    if (b != 0 && a > std::numeric_limits<Value>::max() / b)
        throw OverflowError("product " + std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
    return a * b;
}

IntegerSet::IntegerSet(std::initializer_list<Value> values) : IntegerSet(std::vector<Value>(values)) {}

IntegerSet::IntegerSet(std::vector<Value> values) : elements_(std::move(values))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

IntegerSet IntegerSet::from_sorted(std::vector<Value> values)
{
    IntegerSet s;
    s.elements_ = std::move(values);
    return s;
}

Value IntegerSet::min() const
{
    require_nonempty(*this, "min");
    return elements_.front();
}

Value IntegerSet::max() const
{
    require_nonempty(*this, "max");
    return elements_.back();
}

bool IntegerSet::contains(Value v) const
{
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string to_string(const IntegerSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Value v : s) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

DeterministicIndex DeterministicIndex::of(Value difference)
{
    if (difference == 0)
        throw InvalidArgument("deterministic index must be positive");
    return DeterministicIndex{difference};
}

Value DeterministicIndex::value() const
{
    if (!defined())
        throw PreconditionError("deterministic index is undefined");
    return value_;
}

std::string to_string(DeterministicIndex d)
{
    return d.defined() ? std::to_string(d.value()) : std::string("undefined");
}

APSet APSet::make(Value first, Value difference, std::size_t length)
{
    if (length == 0)
        throw InvalidArgument("AP-set length must be positive");
    if (length == 1)
        return singleton(first);
    APSet ap{first, DeterministicIndex::of(difference), length};
    (void)ap.last();
    return ap;
}

APSet APSet::singleton(Value first)
{
    return APSet{first, DeterministicIndex::undefined(), 1};
}

Value APSet::last() const
{
    if (length_ == 1)
        return first_;
    return checked_add(first_, checked_mul(difference_.value(), static_cast<Value>(length_ - 1)));
}

IntegerSet APSet::expand() const
{
    std::vector<Value> out;
    out.reserve(length_);
    Value step = length_ > 1 ? difference_.value() : 0;
    for (std::size_t i = 0; i < length_; ++i)
        out.push_back(first_ + static_cast<Value>(i) * step);
    return IntegerSet::from_sorted(std::move(out));
}

std::optional<APSet> detect_ap(const IntegerSet& s)
{
    require_nonempty(s, "detect_ap");
    auto e = s.elements();
    if (e.size() == 1)
        return APSet::singleton(e[0]);
    Value d = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] - e[i - 1] != d)
            return std::nullopt;
    return APSet::make(e[0], d, e.size());
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b)
{
    require_nonempty(a, "sumset");
    require_nonempty(b, "sumset");
    (void)checked_add(a.max(), b.max());
    std::vector<Value> out;
    out.reserve(a.size() * b.size());
    for (Value x : a)
        for (Value y : b)
            out.push_back(x + y);
    return IntegerSet(std::move(out));
}

std::size_t CompatibilityTable::max_class_size() const noexcept
{
    std::size_t best = 0;
    for (const auto& [sum, pairs] : classes_)
        best = std::max(best, pairs.size());
    return best;
}

std::vector<Value> CompatibilityTable::trivial_sums() const
{
    std::vector<Value> out;
    for (const auto& [sum, pairs] : classes_)
        if (pairs.size() == 1)
            out.push_back(sum);
    return out;
}

std::vector<Value> CompatibilityTable::saturated_sums() const
{
    std::vector<Value> out;
    for (const auto& [sum, pairs] : classes_)
        if (pairs.size() == saturated_bound_)
            out.push_back(sum);
    return out;
}

CompatibilityTable compatibility_table(const IntegerSet& a, const IntegerSet& b)
{
    require_nonempty(a, "compatibility_table");
    require_nonempty(b, "compatibility_table");
    (void)checked_add(a.max(), b.max());
    CompatibilityTable t;
    t.saturated_bound_ = std::min(a.size(), b.size());
    for (Value x : a)
        for (Value y : b)
            t.classes_[x + y].emplace_back(x, y);
    return t;
}

std::size_t predicted_edge_cardinality(std::size_t m, std::size_t n, std::size_t k)
{
    if (m == 0 || n == 0)
        throw PreconditionError("set-indexing numbers must be positive");
    if (k < 1 || k > m)
        throw PreconditionError("multiplier k=" + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");
    return m + k * (n - 1);
}

} // namespace iasi
