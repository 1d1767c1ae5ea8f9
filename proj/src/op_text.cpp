#include "pado/op_text.hpp"

#include <cctype>
#include <vector>

namespace pado {

std::string op_to_text(const DiffOp& a) {
    std::string v = chart_var(a.chart());
    if (a.is_zero()) return "0/1*" + v + "^0*D" + v + "^0";
    std::string out;
    for (const auto& [j, f] : a.terms()) {
        for (const auto& [k, c] : f.coeffs()) {
            if (!out.empty()) out += " + ";
            out += rat_str(c) + "*" + v + "^" + std::to_string(k) + "*D" + v + "^" + std::to_string(j);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("unexpected end of operator text");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("expected '") + c + "' at position " + std::to_string(i));
        ++i;
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (s[start] == '-' && i == start + 1))
            throw std::invalid_argument("expected number at position " + std::to_string(start));
        return s.substr(start, i - start);
    }
};

}  // namespace

DiffOp op_from_text(const std::string& text) {
    Cursor cur{text};
    std::optional<Chart> chart;
    struct Term {
        Rat c;
        int k;
        int j;
    };
    std::vector<Term> terms;

    while (true) {
        std::string num = cur.number();
        std::string lit = num;
        if (!cur.done() && cur.peek() == '/') {
            cur.expect('/');
            lit += "/" + cur.number();
        }
        Rat c = parse_rat(lit);

        cur.expect('*');
        char v = cur.peek();
        if (v != 'x' && v != 'y') throw std::invalid_argument("expected coordinate x or y");
        Chart seen = (v == 'x') ? Chart::X : Chart::Y;
        if (chart && *chart != seen) throw std::invalid_argument("mixed charts in operator text");
        chart = seen;
        ++cur.i;
        cur.expect('^');
        int k = std::stoi(cur.number());
        if (k < 0) throw std::invalid_argument("negative coordinate exponent");

        cur.expect('*');
        cur.expect('D');
        if (cur.peek() != v) throw std::invalid_argument("derivative letter does not match coordinate");
        ++cur.i;
        cur.expect('^');
        int j = std::stoi(cur.number());
        if (j < 0) throw std::invalid_argument("negative operator order");

        terms.push_back({c, k, j});
        if (cur.done()) break;
        cur.expect('+');
    }

    DiffOp a(chart.value_or(Chart::X));
    for (const auto& t : terms) a.add_term(t.j, Poly::monomial(t.k, t.c));
    return a;
}

}  // namespace pado
