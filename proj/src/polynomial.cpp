#include "g1chow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include <json.hpp>

namespace g1chow {

Symbol Symbol::sigma(int a, int b) {
    if (a < 0 || b < 0 || a > 15 || b > 15 || a + b == 0) throw AlgebraError("bad Schubert index");
    return {SymbolKind::schubert, static_cast<Subset>(a * 16 + b)};
}

int Symbol::degree() const {
    switch (kind) {
        case SymbolKind::banana:
        case SymbolKind::stratum_banana:
            return 2;
        case SymbolKind::schubert:
            return static_cast<int>(data / 16 + data % 16);
        default:
            return 1;
    }
}

std::string Symbol::name() const {
    switch (kind) {
        case SymbolKind::hodge: return "l";
        case SymbolKind::banana: return "v";
        case SymbolKind::tail: return "t" + subset_to_braced(data);
        case SymbolKind::stratum_hodge: return "ls";
        case SymbolKind::stratum_banana: return "vs";
        case SymbolKind::gerbe: return "xi";
        case SymbolKind::divisor: return "d" + subset_to_braced(data);
        case SymbolKind::schubert: return "s{" + std::to_string(data / 16) + "," + std::to_string(data % 16) + "}";
    }
    return "?";
}

namespace {

std::vector<int> parse_braced_list(std::string_view body) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ',' || body[i] == ' ')) ++i;
        if (i >= body.size()) break;
        std::size_t j = i;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == i) throw AlgebraError("bad index list '{" + std::string(body) + "}'");
        out.push_back(std::stoi(std::string(body.substr(i, j - i))));
        i = j;
    }
    return out;
}

}  // namespace

Symbol Symbol::parse(std::string_view text) {
    if (text == "l") return lambda();
    if (text == "v") return nu();
    if (text == "ls") return lambda_s();
    if (text == "vs") return nu_s();
    if (text == "xi") return xi();
    if (text.size() >= 3 && text[1] == '{' && text.back() == '}') {
        auto idx = parse_braced_list(text.substr(2, text.size() - 3));
        switch (text[0]) {
            case 't':
            case 'd': {
                if (idx.size() < 2) throw AlgebraError("subset symbol needs at least two elements: " + std::string(text));
                Subset s = subset_from(idx);
                return text[0] == 't' ? tau(s) : divisor(s);
            }
            case 's':
                if (idx.size() != 2) throw AlgebraError("Schubert symbol needs two indices: " + std::string(text));
                return sigma(idx[0], idx[1]);
            default:
                break;
        }
    }
    throw AlgebraError("unknown symbol '" + std::string(text) + "'");
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind == SymbolKind::tail || a.kind == SymbolKind::divisor) {
        if (a.data == b.data) return std::strong_ordering::equal;
        return subset_less(a.data, b.data) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.data <=> b.data;
}

Monomial::Monomial(Symbol s, std::uint32_t e) {
    if (e > 0) f_.emplace_back(s, e);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [s, e] : f_) d += s.degree() * static_cast<int>(e);
    return d;
}

std::uint32_t Monomial::exponent(const Symbol& s) const {
    for (const auto& [t, e] : f_)
        if (t == s) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto i = f_.begin(), j = o.f_.begin();
    while (i != f_.end() || j != o.f_.end()) {
        if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
            r.f_.push_back(*i++);
        } else if (i == f_.end() || j->first < i->first) {
            r.f_.push_back(*j++);
        } else {
            r.f_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto j = o.f_.begin();
    for (const auto& [s, e] : f_) {
        while (j != o.f_.end() && j->first < s) ++j;
        if (j == o.f_.end() || !(j->first == s) || j->second < e) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    auto i = f_.begin();
    for (const auto& [s, e] : o.f_) {
        while (i != f_.end() && i->first < s) ++i;
        std::uint32_t mine = (i != f_.end() && i->first == s) ? i->second : 0;
        if (mine > e) throw AlgebraError("quotient_of: not a divisor");
        if (e > mine) r.f_.emplace_back(s, e - mine);
    }
    return r;
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : f_) {
        if (!out.empty()) out += '*';
        out += s.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
        if (i->first == j->first) {
            if (i->second != j->second) return i->second > j->second;
            ++i;
            ++j;
        } else {
            // The monomial using the smaller symbol comes first.
            return i->first < j->first;
        }
    }
    return i != fa.end() && j == fb.end();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [s, e] : m.factors()) {
        h ^= (static_cast<std::size_t>(s.kind) << 40) ^ (static_cast<std::size_t>(s.data) << 8) ^ e;
        h *= 1099511628211ull;
    }
    return h;
}

IntPolynomial::IntPolynomial(long c) {
    if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

IntPolynomial::IntPolynomial(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

IntPolynomial::IntPolynomial(const Symbol& s) { terms_.emplace(Monomial(s), Integer(1)); }

IntPolynomial::IntPolynomial(const Monomial& m, const Integer& c) {
    if (c != 0) terms_.emplace(m, c);
}

void IntPolynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int IntPolynomial::degree() const {
    // Terms are sorted by decreasing degree.
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool IntPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

IntPolynomial IntPolynomial::homogeneous_part(int d) const {
    IntPolynomial r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

std::vector<Symbol> IntPolynomial::symbols() const {
    std::set<Symbol> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors()) seen.insert(s);
    return {seen.begin(), seen.end()};
}

Integer IntPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    Integer prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial r(1L), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

IntPolynomial IntPolynomial::substitute(const std::function<IntPolynomial(const Symbol&)>& image) const {
    std::map<Symbol, std::vector<IntPolynomial>> powers;
    auto power = [&](const Symbol& s, std::uint32_t e) -> const IntPolynomial& {
        auto& list = powers[s];
        if (list.empty()) {
            list.emplace_back(1L);
            list.push_back(image(s));
        }
        while (list.size() <= e) list.push_back(list.back() * list[1]);
        return list[e];
    };
    IntPolynomial r;
    for (const auto& [m, c] : terms_) {
        IntPolynomial t(c);
        for (const auto& [s, e] : m.factors()) {
            t = t * power(s, e);
            if (t.is_zero()) break;
        }
        r += t;
    }
    return r;
}

IntPolynomial IntPolynomial::filter_out(const std::function<bool(const Monomial&)>& drop) const {
    IntPolynomial r;
    for (const auto& [m, c] : terms_)
        if (!drop(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

std::string IntPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += m.to_string();
        }
        first = false;
    }
    return out;
}

std::string IntPolynomial::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json ex = nlohmann::json::object();
        for (const auto& [s, e] : m.factors()) ex[s.name()] = e;
        j.push_back({{"coeff", c.get_str()}, {"exponents", ex}});
    }
    return j.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("polynomial JSON: ") + e.what());
    }
    IntPolynomial r;
    for (const auto& term : j) {
        Integer c;
        const auto& cj = term.at("coeff");
        if (cj.is_string()) {
            if (c.set_str(cj.get<std::string>(), 10) != 0) throw AlgebraError("bad coefficient " + cj.dump());
        } else {
            c = Integer(cj.get<long>());
        }
        Monomial m;
        for (const auto& [name, e] : term.at("exponents").items()) m = m * Monomial(Symbol::parse(name), e.get<std::uint32_t>());
        r.add_term(m, c);
    }
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    IntPolynomial parse_all() {
        IntPolynomial p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw AlgebraError("polynomial parse error at " + std::to_string(pos_) + ": " + msg + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    IntPolynomial sum() {
        IntPolynomial acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        IntPolynomial t = product();
        acc += neg ? -t : t;
        while (true) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else break;
        }
        return acc;
    }

    IntPolynomial product() {
        IntPolynomial acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }

    IntPolynomial power() {
        IntPolynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    IntPolynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            IntPolynomial p = sum();
            if (!eat(')')) fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return IntPolynomial(Integer(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '{') {
                std::size_t close = s_.find('}', pos_);
                if (close == std::string_view::npos) fail("'}' expected");
                pos_ = close + 1;
            }
            try {
                return IntPolynomial(Symbol::parse(s_.substr(start, pos_ - start)));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace g1chow
