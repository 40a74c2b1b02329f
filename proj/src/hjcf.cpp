#include "smmp/hjcf.hpp"

#include "smmp/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smmp {

namespace {

void require_window(const Integer& m, const Integer& q) {
    if (m < 2 || q <= 0 || q >= m)
        throw InvalidArgument("expected 0 < q < m, got m=" + to_string(m) + " q=" + to_string(q));
    if (gcd(m, q) != 1)
        throw InvalidArgument("m=" + to_string(m) + " and q=" + to_string(q) + " are not coprime");
}

}  // namespace

Chain::Chain(std::initializer_list<long> entries) {
    entries_.reserve(entries.size());
    for (long e : entries) entries_.emplace_back(e);
    for (const auto& e : entries_)
        if (e < 1) throw InvalidArgument("chain entries must be >= 1");
}

Chain::Chain(std::vector<Integer> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e < 1) throw InvalidArgument("chain entries must be >= 1");
}

bool Chain::is_reduced() const {
    return !entries_.empty() &&
           std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e >= 2; });
}

Chain Chain::reversed() const {
    Chain out;
    out.entries_.assign(entries_.rbegin(), entries_.rend());
    return out;
}

Chain Chain::concat(const Chain& other) const {
    Chain out = *this;
    out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
    return out;
}

CQS::CQS(Integer delta, Integer omega) : delta_(std::move(delta)), omega_(std::move(omega)) {
    if (delta_ < 1) throw InvalidArgument("CQS needs Delta >= 1");
    if (delta_ == 1) {
        if (omega_ != 0) throw InvalidArgument("1/1(1,O) is smooth; expected O = 0");
        return;
    }
    if (omega_ <= 0 || omega_ >= delta_ || gcd(omega_, delta_) != 1)
        throw InvalidArgument("CQS needs 0 < Omega < Delta coprime, got 1/" + to_string(delta_) +
                              "(1," + to_string(omega_) + ")");
}

CQS CQS::dual() const { return CQS(delta_, mod_inverse(omega_, delta_)); }

bool CQS::equivalent(const CQS& other) const {
    return delta_ == other.delta_ &&
           (omega_ == other.omega_ || mod_floor(omega_ * other.omega_, delta_) == mod_floor(1, delta_));
}

bool same_class(const Integer& d, const Integer& o, const Integer& d2, const Integer& o2) {
    if (d != d2 || d < 1) return false;
    Integer a = mod_floor(o, d);
    Integer b = mod_floor(o2, d);
    return a == b || mod_floor(a * b, d) == mod_floor(1, d);
}

Chain expand(const Integer& m, const Integer& q) {
    require_window(m, q);
    std::vector<Integer> out;
    Integer num = m;
    Integer den = q;
    while (den != 0) {
        Integer b;
        mpz_cdiv_q(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer next = b * den - num;
        out.push_back(b);
        num = den;
        den = next;
    }
    return Chain(std::move(out));
}

ProjectiveValue evaluate(const Chain& chain) {
    if (chain.empty()) throw InvalidArgument("cannot evaluate an empty chain");
    // running product of [[b,-1],[1,0]]; only the first column is needed for the value,
    // the second column is the previous first column
    Integer p0 = 1, q0 = 0;  // column 1
    Integer p1 = 0, q1 = 1;  // column 2
    for (const auto& b : chain.entries()) {
        Integer np = p0 * b + p1;
        Integer nq = q0 * b + q1;
        p1 = -p0;
        q1 = -q0;
        p0 = std::move(np);
        q0 = std::move(nq);
    }
    return {p0, q0};
}

CQS to_cqs(const Chain& chain) {
    ProjectiveValue v = evaluate(chain);
    if (v.p <= 0)
        throw DegenerateChain("chain " + format_chain(chain) + " does not define a quotient singularity");
    return CQS(v.p, mod_floor(v.q, v.p));
}

Chain contract_ones(const Chain& chain) {
    std::vector<Integer> c = chain.entries();
    for (;;) {
        auto it = std::find(c.begin(), c.end(), Integer(1));
        if (it == c.end()) break;
        auto k = static_cast<std::size_t>(it - c.begin());
        if (k > 0) c[k - 1] -= 1;
        if (k + 1 < c.size()) c[k + 1] -= 1;
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(k));
        for (const auto& e : c)
            if (e < 1) throw DegenerateChain("blow-down of " + format_chain(chain) + " reaches a non-negative curve");
    }
    return Chain(std::move(c));
}

HJSequences sequences(const Integer& m, const Integer& q) {
    HJSequences h;
    h.m = m;
    h.q = q;
    h.chain = expand(m, q);
    const std::size_t s = h.chain.size();
    h.alpha.resize(s + 2);
    h.beta.resize(s + 2);
    h.gamma.resize(s + 2);
    h.beta[0] = m;
    h.beta[1] = q;
    h.alpha[0] = 0;
    h.alpha[1] = 1;
    h.gamma[0] = -1;
    h.gamma[1] = 0;
    for (std::size_t i = 1; i <= s; ++i) {
        const Integer& b = h.chain[i - 1];
        h.beta[i + 1] = b * h.beta[i] - h.beta[i - 1];
        h.alpha[i + 1] = b * h.alpha[i] - h.alpha[i - 1];
        h.gamma[i + 1] = b * h.gamma[i] - h.gamma[i - 1];
    }
    if (h.beta[s + 1] != 0 || h.beta[s] != 1 || h.alpha[s + 1] != m)
        throw InternalError("HJ sequences out of range for " + to_string(m) + "/" + to_string(q));
    return h;
}

std::vector<Rational> discrepancies(const Integer& m, const Integer& q) {
    HJSequences h = sequences(m, q);
    std::vector<Rational> out;
    out.reserve(h.chain.size());
    for (std::size_t i = 1; i <= h.chain.size(); ++i)
        out.push_back(make_rational(h.beta[i] + h.alpha[i], m) - 1);
    return out;
}

std::string format_chain(const Chain& chain) {
    std::string out = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += ',';
        out += chain[i].get_str();
    }
    out += ']';
    return out;
}

std::string format_cqs(const CQS& cqs) {
    return "1/" + cqs.delta().get_str() + "(1," + cqs.omega().get_str() + ")";
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    Integer number() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a non-negative integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Chain parse_chain(std::string_view text) {
    Cursor cur(text);
    cur.expect('[');
    std::vector<Integer> entries;
    do {
        std::size_t at = cur.pos();
        Integer b = cur.number();
        if (b < 1) throw ParseError("chain entries must be >= 1", at);
        entries.push_back(std::move(b));
    } while (cur.accept(','));
    cur.expect(']');
    if (!cur.at_end()) throw ParseError("trailing characters after chain", cur.pos());
    return Chain(std::move(entries));
}

CQS parse_cqs(std::string_view text) {
    Cursor cur(text);
    std::size_t at = cur.pos();
    if (cur.number() != 1) throw ParseError("expected leading '1/'", at);
    cur.expect('/');
    Integer delta = cur.number();
    cur.expect('(');
    at = cur.pos();
    if (cur.number() != 1) throw ParseError("expected '(1,'", at);
    cur.expect(',');
    Integer omega = cur.number();
    cur.expect(')');
    if (!cur.at_end()) throw ParseError("trailing characters after singularity", cur.pos());
    return CQS(std::move(delta), std::move(omega));
}

}  // namespace smmp
