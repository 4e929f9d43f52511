#include <stdexcept>

#include <json.hpp>

#include "satgame/analysis.hpp"

namespace satgame {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational ceil_rational(const Rational& r)
{
    std::int64_t n = r.numerator();
    std::int64_t d = r.denominator();
    if (n >= 0)
        return Rational((n + d - 1) / d);
    return Rational(n / d);
}

std::string to_string(BoundKind b)
{
    switch (b) {
    case BoundKind::PassPath:
        return "pass-path";
    case BoundKind::P4:
        return "p4";
    case BoundKind::P5:
        return "p5";
    case BoundKind::Trees:
        return "trees";
    case BoundKind::Star:
        return "star";
    }
    return {};
}

BoundKind parse_bound_kind(std::string_view text)
{
    for (auto b : {BoundKind::PassPath, BoundKind::P4, BoundKind::P5, BoundKind::Trees, BoundKind::Star})
        if (to_string(b) == text)
            return b;
    throw std::invalid_argument("unknown bound '" + std::string(text) + "'");
}

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

TreeScore tree_score_formula(int n, int k)
{
    if (k < 2 || n < 1)
        throw std::invalid_argument("tree score needs k >= 2 and n >= 1");
    TreeScore out;
    if (k == 2 || n % (k - 1) != 1) {
        std::int64_t q = n / (k - 1);
        std::int64_t value = q * choose2(k - 1) + choose2(n - (k - 1) * q);
        out.lower = out.upper = Rational(value);
        return out;
    }
    out.exact = false;
    out.upper = Rational(n, k - 1) * choose2(k - 1);
    out.lower = out.upper - (k - 3);
    return out;
}

Rational degree_sum_bound(int n, int k, int delta)
{
    if (delta < 0 || delta > n - 1)
        throw std::invalid_argument("delta must lie in [0, n-1]");
    std::int64_t slack = std::max<std::int64_t>(k - 2 - 2 * delta, 0);
    return Rational(slack * (n - delta - 1) + std::int64_t{delta} * n, 2);
}

int degree_sum_minimizer(int k) { return (k - 2) / 2; }

Rational erdos_gallai_upper(int n, int k) { return Rational(std::int64_t{n} * (k - 2), 2); }

std::vector<Rational> f_sequence(int n, int k)
{
    if (k < 2)
        throw std::invalid_argument("f sequence needs k >= 2");
    std::vector<Rational> f{Rational(0)};
    for (int i = 0; i + 1 <= k - 1; ++i) {
        const Rational& fi = f.back();
        f.push_back(fi + Rational(n + 2 * k + 2) - fi * 2 / Rational(k - i));
    }
    return f;
}

Rational f_closed_form(int n, int k, int i)
{
    return Rational(std::int64_t{i} * (n + 2 * k + 2) * (k - i), k - 1);
}

BoundReport bound(BoundKind kind, int n, std::optional<int> k, std::optional<int> observed)
{
    BoundReport r;
    r.kind = kind;
    r.n = n;
    r.k = k;
    r.observed = observed;
    auto out_of_domain = [&](std::string why) {
        r.in_domain = false;
        r.holds = false;
        r.note = std::move(why);
        return r;
    };
    switch (kind) {
    case BoundKind::PassPath:
        if (!k || *k < 2 || n < *k)
            return out_of_domain("requires k >= 2 and n >= k");
        r.lower = Rational(std::int64_t{n} * (*k - 2), 4);
        r.upper = Rational(std::int64_t{n} * (*k - 1), 2);
        r.note = "classical P_k-free maximum n(k-2)/2 = " + to_string(erdos_gallai_upper(n, *k));
        break;
    case BoundKind::P4:
        if (n < 1)
            return out_of_domain("requires n > 0");
        r.lower = Rational(4 * n, 5) - Rational(8, 5);
        r.upper = Rational(4 * n, 5) + 1;
        break;
    case BoundKind::P5:
        if (n < 1)
            return out_of_domain("requires n > 0");
        r.lower = Rational(n - 1);
        r.upper = Rational(n + 2);
        break;
    case BoundKind::Trees: {
        if (!k || *k < 2 || n < 1)
            return out_of_domain("requires k >= 2 and n >= 1");
        TreeScore t = tree_score_formula(n, *k);
        r.lower = t.lower;
        r.upper = t.upper;
        if (!t.exact)
            r.note = "n = 1 (mod k-1): interval bound";
        break;
    }
    case BoundKind::Star:
        if (!k || *k < 2 || std::int64_t{n} < std::int64_t{3 * *k + 1} * (*k - 2))
            return out_of_domain("requires k >= 2 and n >= (3k+1)(k-2)");
        r.lower = Rational(std::int64_t{*k} * n - 2 * (*k - 1), 2);
        r.upper = Rational(std::int64_t{*k} * n, 2);
        break;
    }
    r.holds = observed && r.lower <= Rational(*observed) && Rational(*observed) <= r.upper;
    return r;
}

std::optional<BoundReport> bound_for(const ForbiddenFamily& family, Variant variant, int n,
                                     std::optional<int> observed)
{
    using Kind = ForbiddenFamily::Kind;
    if (family.kind() == Kind::Path && variant == Variant::ProlongerMayPass)
        return bound(BoundKind::PassPath, n, family.param(), observed);
    if (variant != Variant::Standard)
        return std::nullopt;
    if (family.kind() == Kind::Path && family.param() == 4)
        return bound(BoundKind::P4, n, std::nullopt, observed);
    if (family.kind() == Kind::Path && family.param() == 5)
        return bound(BoundKind::P5, n, std::nullopt, observed);
    if (family.kind() == Kind::Trees)
        return bound(BoundKind::Trees, n, family.param(), observed);
    if (family.kind() == Kind::Star)
        return bound(BoundKind::Star, n, family.param() - 1, observed);
    return std::nullopt;
}

std::string BoundReport::to_json() const
{
    nlohmann::ordered_json j;
    j["bound"] = to_string(kind);
    j["n"] = n;
    j["k"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
    j["lower"] = to_string(lower);
    j["upper"] = to_string(upper);
    j["observed"] = observed ? nlohmann::ordered_json(*observed) : nlohmann::ordered_json(nullptr);
    j["in_domain"] = in_domain;
    j["holds"] = holds;
    j["note"] = note;
    return j.dump();
}

}  // namespace satgame
