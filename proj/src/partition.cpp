#include "sshl/partition.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sshl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiplicities(const std::vector<int>& m)
{
    std::vector<int> parts;
    for (int i = static_cast<int>(m.size()) - 1; i >= 1; --i)
        for (int k = 0; k < m[i]; ++k)
            parts.push_back(i);
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty() || t == "∅")
        return {};
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw std::invalid_argument("malformed partition: " + std::string(text));
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

int Partition::mult(int i) const
{
    if (i <= 0)
        return 0;
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities(int upto) const
{
    std::vector<int> m(static_cast<std::size_t>(std::max(upto, 0)) + 1, 0);
    for (int p : parts_)
        if (p <= upto)
            ++m[p];
    return m;
}

std::string Partition::str() const
{
    if (parts_.empty())
        return "∅";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.parts())
        h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h ^ p.parts().size();
}

bool interlaces(const Partition& mu, const Partition& lambda)
{
    int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i)
        if (!(lambda.part(i + 1) <= mu.part(i) && mu.part(i) <= lambda.part(i)))
            return false;
    return true;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> c;
    for (int i = 1; i <= lambda.first(); ++i) {
        int n = 0;
        for (int p : lambda.parts())
            n += p >= i;
        c.push_back(n);
    }
    return Partition(std::move(c));
}

bool is_conjugate_even(const Partition& lambda)
{
    if (lambda.length() % 2)
        return false;
    for (int i = 1; i <= lambda.length(); i += 2)
        if (lambda.part(i) != lambda.part(i + 1))
            return false;
    return true;
}

Q b_el(const Partition& mu, const Params& p)
{
    auto m = mu.multiplicities(mu.first());
    Q out = 1;
    for (std::size_t i = 1; i < m.size(); ++i) {
        assert(m[i] % 2 == 0 && "b_el expects even multiplicities");
        for (int k = 1; k <= m[i] / 2; ++k) {
            Q qk = pow(p.q, 2 * k - 1);
            out *= checked_div(1 - qk, 1 - p.s * p.s * qk);
        }
    }
    return out;
}

Partition even_cover(const Partition& kappa)
{
    std::vector<int> parts;
    for (int i = 1; i <= kappa.length(); i += 2) {
        parts.push_back(kappa.part(i));
        parts.push_back(kappa.part(i));
    }
    return Partition(std::move(parts));
}

Partition even_core(const Partition& kappa)
{
    std::vector<int> parts;
    for (int i = 2; i <= kappa.length(); i += 2) {
        parts.push_back(kappa.part(i));
        parts.push_back(kappa.part(i));
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate(int max_part, int max_len)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int bound) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int v = 1; v <= bound; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_part);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts() > b.parts();
    });
    return out;
}

std::vector<Partition> interlacing_below(const Partition& lambda)
{
    std::vector<Partition> out;
    const int n = lambda.length();
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0)
                    parts.push_back(v);
            out.emplace_back(std::move(parts));
            return;
        }
        for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
            cur[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

std::vector<Partition> interlacing_above(const Partition& lambda, int max_first)
{
    std::vector<Partition> out;
    const int n = lambda.length() + 1;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0)
                    parts.push_back(v);
            out.emplace_back(std::move(parts));
            return;
        }
        int hi = i == 1 ? max_first : lambda.part(i - 1);
        for (int v = lambda.part(i); v <= hi; ++v) {
            cur[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

} // namespace sshl
