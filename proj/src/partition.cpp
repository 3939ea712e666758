#include "spinrock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinrock {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

bool canonical_before(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a.parts > b.parts;  // reverse-lexicographic: (n) first, (1^n) last
}

Partition conjugate(const Partition& lam)
{
    std::vector<int> cols;
    if (!lam.parts.empty())
        cols.assign(static_cast<size_t>(lam.parts[0]), 0);
    for (int part : lam.parts)
        for (int c = 0; c < part; ++c)
            ++cols[static_cast<size_t>(c)];
    return Partition(std::move(cols));
}

bool dominates(const Partition& lam, const Partition& mu)
{
    if (lam.size() != mu.size())
        return false;
    int sl = 0, sm = 0;
    int rows = std::max(lam.num_parts(), mu.num_parts());
    for (int r = 1; r <= rows; ++r) {
        sl += lam.part(r);
        sm += mu.part(r);
        if (sl < sm)
            return false;
    }
    return true;
}

Partition plus(const Partition& lam, const Partition& mu)
{
    int rows = std::max(lam.num_parts(), mu.num_parts());
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rows));
    for (int r = 1; r <= rows; ++r)
        out.push_back(lam.part(r) + mu.part(r));
    return Partition(std::move(out));
}

Partition union_sorted(const Partition& lam, const Partition& mu)
{
    std::vector<int> out = lam.parts;
    out.insert(out.end(), mu.parts.begin(), mu.parts.end());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner)
{
    for (int r = 1; r <= inner.num_parts(); ++r)
        if (inner.part(r) > outer.part(r))
            return false;
    return true;
}

int parity_a(const Partition& lam)
{
    int evens = 0;
    for (int part : lam.parts)
        if (part % 2 == 0)
            ++evens;
    return evens % 2;
}

bool is_strict(const Partition& lam)
{
    for (int r = 2; r <= lam.num_parts(); ++r)
        if (lam.part(r - 1) == lam.part(r))
            return false;
    return true;
}

bool is_p_strict(const Partition& lam, int p)
{
    for (int r = 2; r <= lam.num_parts(); ++r)
        if (lam.part(r - 1) == lam.part(r) && lam.part(r) % p != 0)
            return false;
    return true;
}

bool is_restricted(const Partition& lam, int p)
{
    if (!is_p_strict(lam, p))
        return false;
    for (int r = 1; r <= lam.num_parts(); ++r) {
        int gap = lam.part(r) - lam.part(r + 1);
        if (gap < p)
            continue;
        if (gap == p && lam.part(r) % p != 0)
            continue;
        return false;
    }
    return true;
}

bool is_p_prime(const Partition& lam, int p)
{
    for (int part : lam.parts)
        if (part % p == 0)
            return false;
    return true;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        acc.push_back(part);
        gen_partitions(n - part, part, acc, out);
        acc.pop_back();
    }
}

void gen_strict(int n, int max_part, std::vector<int>& acc,
                std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        acc.push_back(part);
        gen_strict(n - part, part - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

std::vector<Partition> enumerate_strict(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_strict: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_strict(n, n, acc, out);
    return out;
}

std::vector<std::vector<Partition>> enumerate_multipartitions(int components, int d)
{
    if (components < 0 || d < 0)
        throw std::invalid_argument("enumerate_multipartitions: negative argument");
    std::vector<std::vector<Partition>> out;
    if (components == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    for (int s = d; s >= 0; --s)
        for (const Partition& first : enumerate_partitions(s))
            for (const auto& rest : enumerate_multipartitions(components - 1, d - s)) {
                std::vector<Partition> tuple;
                tuple.reserve(static_cast<size_t>(components));
                tuple.push_back(first);
                tuple.insert(tuple.end(), rest.begin(), rest.end());
                out.push_back(std::move(tuple));
            }
    return out;
}

int residue(int p, int row, int col)
{
    if (p < 3 || p % 2 == 0 || row < 1 || col < 1)
        throw std::invalid_argument("residue: bad arguments");
    int a = (col - 1) % p;
    int b = (p - col % p) % p;
    return std::min(a, b);
}

Partition parse_partition(const std::string& text)
{
    std::string s = text;
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::istringstream is(s);
    std::string token;
    while (std::getline(is, token, ',')) {
        // Trim surrounding whitespace.
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty entry in partition string");
        token = token.substr(b, e - b + 1);
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != token.size())
            throw std::invalid_argument("bad integer in partition string: " + token);
        parts.push_back(value);
    }
    return Partition(std::move(parts));  // validates monotonicity/positivity
}

}  // namespace spinrock
