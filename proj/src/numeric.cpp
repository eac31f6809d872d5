#include "sshl/numeric.hpp"

#include <cctype>

namespace sshl {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Q parse_rational(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
        t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
        t.remove_suffix(1);
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    Q v;
    auto slash = t.find('/');
    auto dot = t.find('.');
    if (slash != std::string_view::npos) {
        auto a = t.substr(0, slash), b = t.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b))
            throw invalid_params("malformed rational: " + std::string(text));
        mpz_class den{std::string(b), 10};
        if (den == 0)
            throw invalid_params("zero denominator: " + std::string(text));
        v = Q(mpz_class(std::string(a), 10), den);
    } else if (dot != std::string_view::npos) {
        auto a = t.substr(0, dot), b = t.substr(dot + 1);
        if ((!a.empty() && !all_digits(a)) || !all_digits(b))
            throw invalid_params("malformed decimal: " + std::string(text));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, b.size());
        mpz_class num(std::string(a.empty() ? "0" : a) + std::string(b), 10);
        v = Q(num, den);
    } else {
        if (!all_digits(t))
            throw invalid_params("malformed integer: " + std::string(text));
        v = Q(mpz_class(std::string(t), 10));
    }
    v.canonicalize();
    return neg ? Q(-v) : v;
}

std::string to_string(const Q& v) { return v.get_str(); }

double to_double(const Q& v) { return v.get_d(); }

Q pow(const Q& base, unsigned e)
{
    Q r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

Q checked_div(const Q& num, const Q& den)
{
    if (den == 0)
        throw invalid_params("division by zero in weight expression");
    return num / den;
}

void validate(const Params& p, Mode mode)
{
    if (mode == Mode::identity)
        return;
    if (!(p.q > 0 && p.q < 1))
        throw invalid_params("probabilistic mode needs q in (0,1)");
    if (!(p.s > -1 && p.s < 0))
        throw invalid_params("probabilistic mode needs s in (-1,0)");
    for (std::size_t i = 0; i < p.x.size(); ++i)
        if (!(p.x[i] >= 0 && p.x[i] < 1))
            throw invalid_params("probabilistic mode needs x[" + std::to_string(i) + "] in [0,1)");
}

bool admissible(const Q& x, const Q& y, const Params& p)
{
    const Q& s = p.s;
    return (x - s) * (y - s) < (1 - s * x) * (1 - s * y);
}

Q convergence_ratio(const Q& x, const Q& y, const Params& p)
{
    const Q& s = p.s;
    return checked_div((x - s) * (y - s), (1 - s * x) * (1 - s * y));
}

Q cauchy_factor(const Q& x, const Q& y, const Params& p)
{
    Q z = x * y;
    return checked_div(1 - p.q * z, 1 - z);
}

} // namespace sshl
