#include "fock/charges.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fock {

std::string word_to_string(const GeneratorWord& word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ',';
        switch (word[i].kind) {
            case GenToken::Sigma: os << 's' << word[i].index; break;
            case GenToken::Tau: os << 't'; break;
            case GenToken::TauInv: os << 'T'; break;
        }
    }
    return os.str();
}

GeneratorWord word_from_string(const std::string& text, int level) {
    GeneratorWord word;
    if (text.empty()) return word;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "t") {
            word.push_back({GenToken::Tau, 0});
        } else if (tok == "T") {
            word.push_back({GenToken::TauInv, 0});
        } else if (tok.size() >= 2 && tok[0] == 's') {
            int idx = 0;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw parse_error("bad generator token '" + tok + "'");
            }
            if (idx < 1 || idx >= level)
                throw parse_error("sigma index out of range in '" + tok + "'");
            word.push_back({GenToken::Sigma, idx});
        } else {
            throw parse_error("bad generator token '" + tok + "'");
        }
    }
    return word;
}

Multicharge act_sigma(const Multicharge& charge, int c) {
    if (c < 1 || c >= charge.level())
        throw domain_error("sigma index out of range");
    Multicharge out = charge;
    std::swap(out.entries[c - 1], out.entries[c]);
    return out;
}

Multicharge act_y(const Multicharge& charge, int i) {
    if (i < 1 || i > charge.level())
        throw domain_error("y index out of range");
    Multicharge out = charge;
    out.entries[i - 1] += charge.e;
    return out;
}

Multicharge act_tau(const Multicharge& charge) {
    Multicharge out = charge;
    std::rotate(out.entries.begin(), out.entries.begin() + 1, out.entries.end());
    out.entries.back() += charge.e;
    return out;
}

Multicharge act_tau_inverse(const Multicharge& charge) {
    Multicharge out = charge;
    std::rotate(out.entries.begin(), out.entries.end() - 1, out.entries.end());
    out.entries.front() -= charge.e;
    return out;
}

Multicharge apply_token(const Multicharge& charge, const GenToken& token) {
    switch (token.kind) {
        case GenToken::Sigma: return act_sigma(charge, token.index);
        case GenToken::Tau: return act_tau(charge);
        case GenToken::TauInv: return act_tau_inverse(charge);
    }
    throw domain_error("bad token");
}

Multicharge apply_word(const Multicharge& charge, const GeneratorWord& word) {
    Multicharge cur = charge;
    for (const GenToken& token : word) cur = apply_token(cur, token);
    return cur;
}

bool same_orbit(const Multicharge& s1, const Multicharge& s2) {
    if (s1.level() != s2.level())
        throw domain_error("multicharge lengths differ");
    if (s1.e != s2.e) throw domain_error("multicharge levels e differ");
    std::vector<int> r1, r2;
    for (int v : s1.entries) r1.push_back(mod_e(v, s1.e));
    for (int v : s2.entries) r2.push_back(mod_e(v, s2.e));
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    return r1 == r2;
}

namespace {

// y_1 as a token word: tau then sigma_{l-1},...,sigma_1.
void append_y1(GeneratorWord& word, int level, bool inverse) {
    if (!inverse) {
        word.push_back({GenToken::Tau, 0});
        for (int c = level - 1; c >= 1; --c) word.push_back({GenToken::Sigma, c});
    } else {
        for (int c = 1; c <= level - 1; ++c) word.push_back({GenToken::Sigma, c});
        word.push_back({GenToken::TauInv, 0});
    }
}

} // namespace

std::pair<Multicharge, GeneratorWord> to_fundamental(const Multicharge& charge) {
    const int l = charge.level();
    GeneratorWord word;
    Multicharge cur = charge;
    auto emit = [&](GenToken token) {
        word.push_back(token);
        cur = apply_token(cur, token);
    };

    // Normalize each entry into [0, e): bring it to the front, shift by
    // multiples of e via y_1, move it back.
    for (int pos = 1; pos <= l; ++pos) {
        for (int c = pos - 1; c >= 1; --c) emit({GenToken::Sigma, c});
        while (cur.entries[0] < 0) {
            GeneratorWord y1;
            append_y1(y1, l, false);
            for (const auto& token : y1) emit(token);
        }
        while (cur.entries[0] >= cur.e) {
            GeneratorWord y1;
            append_y1(y1, l, true);
            for (const auto& token : y1) emit(token);
        }
        for (int c = 1; c <= pos - 1; ++c) emit({GenToken::Sigma, c});
    }

    // Bubble sort ascending with adjacent swaps.
    for (int pass = 0; pass < l; ++pass)
        for (int c = 1; c <= l - 1; ++c)
            if (cur.entries[c - 1] > cur.entries[c]) emit({GenToken::Sigma, c});

    // Self-check: replay and fundamental-domain membership.
    if (!(apply_word(charge, word) == cur))
        throw domain_error("to_fundamental replay mismatch");
    for (int c = 0; c < l; ++c) {
        if (cur.entries[c] < 0 || cur.entries[c] >= cur.e ||
            (c > 0 && cur.entries[c - 1] > cur.entries[c]))
            throw domain_error("to_fundamental result outside fundamental domain");
    }
    return {cur, word};
}

bool is_flotw(const Multipartition& mp, const Multicharge& charge) {
    const int l = charge.level();
    if (mp.level() != l)
        throw domain_error("multipartition and multicharge levels differ");
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            int d = charge.entry(j) - charge.entry(i);
            if (d <= 0 || d >= charge.e)
                throw domain_error("FLOTW characterization needs 0 < s_j - s_i < e");
        }

    // (1) cyclic dominance between adjacent components
    for (int j = 1; j <= l - 1; ++j) {
        int d = charge.entry(j + 1) - charge.entry(j);
        int rows = std::max(mp.component(j).length(), mp.component(j + 1).length());
        for (int i = 1; i <= rows; ++i)
            if (mp.component(j).part(i) < mp.component(j + 1).part(i + d))
                return false;
    }
    // (2) wrap-around from the last component to the first
    {
        int d = charge.e + charge.entry(1) - charge.entry(l);
        int rows = std::max(mp.component(l).length(), mp.component(1).length());
        for (int i = 1; i <= rows; ++i)
            if (mp.component(l).part(i) < mp.component(1).part(i + d))
                return false;
    }
    // (3) for each part value, the occurring residues miss some class mod e
    std::set<int> values;
    for (int j = 1; j <= l; ++j)
        for (int part : mp.component(j).parts()) values.insert(part);
    for (int k : values) {
        std::set<int> residues;
        for (int j = 1; j <= l; ++j) {
            const Partition& p = mp.component(j);
            for (int i = 1; i <= p.length(); ++i)
                if (p.part(i) == k)
                    residues.insert(mod_e(k - i + charge.entry(j), charge.e));
        }
        if (static_cast<int>(residues.size()) == charge.e) return false;
    }
    return true;
}

bool is_very_dominant(const Multicharge& charge, int n) {
    if (n < 0) throw domain_error("rank must be nonnegative");
    for (int i = 1; i <= charge.level(); ++i)
        for (int j = i + 1; j <= charge.level(); ++j)
            if (charge.entry(j) - charge.entry(i) < n - 1 - charge.e) return false;
    return true;
}

} // namespace fock
