#include "weylstat/signed_perm.hpp"

#include <cstdlib>
#include <sstream>

#include "weylstat/caps.hpp"

namespace weylstat {

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
    const int n = static_cast<int>(w_.size());
    if (n < 1) throw parse_error("window must have at least one letter");
    if (n > caps().window_degree)
        throw resource_limit_error("window length " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(caps().window_degree));
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = w_[static_cast<size_t>(i)];
        if (v == 0)
            throw parse_error("entry " + std::to_string(i + 1) + " is zero");
        const int a = std::abs(v);
        if (a > n)
            throw parse_error("entry " + std::to_string(i + 1) + " has absolute value " +
                              std::to_string(a) + " > n = " + std::to_string(n));
        if (seen[static_cast<size_t>(a)])
            throw parse_error("absolute value " + std::to_string(a) + " repeats");
        seen[static_cast<size_t>(a)] = 1;
    }
}

int negs(const SignedPerm& p) {
    int c = 0;
    for (int v : p.window())
        if (v < 0) ++c;
    return c;
}

bool in_group(const SignedPerm& p, Group g) {
    switch (g) {
        case Group::A: return negs(p) == 0;
        case Group::B: return true;
        case Group::D: return negs(p) % 2 == 0;
        case Group::BminusD: return negs(p) % 2 == 1;
    }
    return false;
}

int sign_of(const SignedPerm& p, Group g) {
    int parity = 0;
    switch (g) {
        case Group::A:
            if (negs(p) != 0)
                throw not_applicable_error("type A sign needs an all-positive window");
            parity = stat_inv(p);
            break;
        case Group::B: parity = stat_inv_b(p); break;
        case Group::D:
        case Group::BminusD: parity = stat_inv_d(p); break;
    }
    return parity % 2 == 0 ? 1 : -1;
}

bool in_sign_class(const SignedPerm& p, Group g, SignClass s) {
    if (!in_group(p, g)) return false;
    if (s == SignClass::All) return true;
    return sign_of(p, g) == (s == SignClass::Plus ? 1 : -1);
}

static void require_positive(const SignedPerm& p, const char* stat) {
    if (negs(p) != 0)
        throw not_applicable_error(std::string(stat) +
                                   " is defined only on all-positive windows");
}

int stat_des(const SignedPerm& p) {
    require_positive(p, "des");
    int c = 0;
    for (int i = 1; i < p.n(); ++i)
        if (p.at(i) > p.at(i + 1)) ++c;
    return c;
}

int stat_exc(const SignedPerm& p) {
    require_positive(p, "exc");
    int c = 0;
    for (int i = 1; i < p.n(); ++i)
        if (p.at(i) > i) ++c;
    return c;
}

int stat_inv(const SignedPerm& p) {
    require_positive(p, "inv");
    return window_inversions(p);
}

int window_inversions(const SignedPerm& p) {
    int c = 0;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p.at(i) > p.at(j)) ++c;
    return c;
}

int stat_des_b(const SignedPerm& p) {
    int c = p.at(1) < 0 ? 1 : 0; // virtual pi_0 = 0
    for (int i = 1; i < p.n(); ++i)
        if (p.at(i) > p.at(i + 1)) ++c;
    return c;
}

int stat_asc_b(const SignedPerm& p) { return p.n() - stat_des_b(p); }

int stat_exc_b(const SignedPerm& p) {
    // Union of the two index sets; they are disjoint (pi_i = -i makes the
    // first condition pi_i > pi_i), but count via the union regardless.
    int c = 0;
    for (int i = 1; i <= p.n(); ++i) {
        const int v = p.at(i);
        if (p.at(std::abs(v)) > v || v == -i) ++c;
    }
    return c;
}

int stat_inv_d(const SignedPerm& p) {
    int c = window_inversions(p);
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (-p.at(i) > p.at(j)) ++c;
    return c;
}

int stat_inv_b(const SignedPerm& p) { return stat_inv_d(p) + negs(p); }

int stat_negs(const SignedPerm& p) { return negs(p); }

int stat_des_d(const SignedPerm& p) {
    // Virtual pi_0 = -pi_2 needs a second letter; the one-letter window has no
    // type-D descent by convention.
    if (p.n() == 1) return 0;
    int c = -p.at(2) > p.at(1) ? 1 : 0;
    for (int i = 1; i < p.n(); ++i)
        if (p.at(i) > p.at(i + 1)) ++c;
    return c;
}

int stat_value(const SignedPerm& p, Stat s) {
    switch (s) {
        case Stat::Des: return stat_des(p);
        case Stat::Exc: return stat_exc(p);
        case Stat::Inv: return stat_inv(p);
        case Stat::DesB: return stat_des_b(p);
        case Stat::AscB: return stat_asc_b(p);
        case Stat::ExcB: return stat_exc_b(p);
        case Stat::InvB: return stat_inv_b(p);
        case Stat::InvD: return stat_inv_d(p);
        case Stat::Negs: return stat_negs(p);
        case Stat::DesD: return stat_des_d(p);
    }
    throw error("unknown statistic");
}

int max_stat_value(Stat s, int n) {
    switch (s) {
        case Stat::Des:
        case Stat::Exc: return n - 1;
        case Stat::Inv: return n * (n - 1) / 2;
        case Stat::DesB:
        case Stat::AscB:
        case Stat::ExcB:
        case Stat::Negs:
        case Stat::DesD: return n;
        case Stat::InvD: return n * (n - 1); // n(n-1)/2 window pairs + n(n-1)/2 cross pairs
        case Stat::InvB: return n * n;
    }
    throw error("unknown statistic");
}

const char* group_id(Group g) {
    switch (g) {
        case Group::A: return "a";
        case Group::B: return "b";
        case Group::D: return "d";
        case Group::BminusD: return "b-minus-d";
    }
    return "?";
}

const char* sign_id(SignClass s) {
    switch (s) {
        case SignClass::All: return "all";
        case SignClass::Plus: return "plus";
        case SignClass::Minus: return "minus";
    }
    return "?";
}

const char* stat_id(Stat s) {
    switch (s) {
        case Stat::Des: return "des";
        case Stat::Exc: return "exc";
        case Stat::Inv: return "inv";
        case Stat::DesB: return "des-b";
        case Stat::AscB: return "asc-b";
        case Stat::ExcB: return "exc-b";
        case Stat::InvB: return "inv-b";
        case Stat::InvD: return "inv-d";
        case Stat::Negs: return "negs";
        case Stat::DesD: return "des-d";
    }
    return "?";
}

bool parse_group_id(const std::string& id, Group& out) {
    for (Group g : {Group::A, Group::B, Group::D, Group::BminusD})
        if (id == group_id(g)) {
            out = g;
            return true;
        }
    return false;
}

bool parse_sign_id(const std::string& id, SignClass& out) {
    for (SignClass s : {SignClass::All, SignClass::Plus, SignClass::Minus})
        if (id == sign_id(s)) {
            out = s;
            return true;
        }
    return false;
}

bool parse_stat_id(const std::string& id, Stat& out) {
    for (Stat s : {Stat::Des, Stat::Exc, Stat::Inv, Stat::DesB, Stat::AscB, Stat::ExcB,
                   Stat::InvB, Stat::InvD, Stat::Negs, Stat::DesD})
        if (id == stat_id(s)) {
            out = s;
            return true;
        }
    return false;
}

SignedPerm parse_window(const std::string& text) {
    std::vector<int> vals;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // Trim surrounding spaces, then demand a bare signed integer.
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw parse_error("empty entry in window \"" + text + "\"");
        token = token.substr(b, e - b + 1);
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("entry \"" + token + "\" is not an integer");
        }
    }
    if (vals.empty()) throw parse_error("window \"" + text + "\" has no entries");
    return SignedPerm(std::move(vals));
}

std::string format_window(const SignedPerm& p) {
    std::string out;
    for (int i = 1; i <= p.n(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.at(i));
    }
    return out;
}

} // namespace weylstat
