#include "hs/parse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hs {

namespace {

std::string strip(const std::string& text, const char* dropped) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (std::string_view(dropped).find(c) == std::string_view::npos) out.push_back(c);
    return out;
}

double parse_real(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw std::invalid_argument("malformed number '" + text + "'");
    return value;
}

// Rational multiples of pi inside exp(...): "2pi*i/3", "i*pi/4", "-pi*i".
Complex parse_exp_form(const std::string& inner) {
    std::string body = strip(inner, "* ");
    double sign = 1.0;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        if (body[0] == '-') sign = -1.0;
        body.erase(0, 1);
    }
    const std::size_t pi_pos = body.find("pi");
    if (pi_pos == std::string::npos)
        throw std::invalid_argument("exp() argument must be a multiple of pi*i");
    std::string rest = body.substr(0, pi_pos) + body.substr(pi_pos + 2);
    // Exactly one standalone 'i' must remain.
    const std::size_t i_pos = rest.find('i');
    if (i_pos == std::string::npos || rest.find('i', i_pos + 1) != std::string::npos)
        throw std::invalid_argument("exp() argument must be purely imaginary");
    rest.erase(i_pos, 1);
    double numerator = 1.0;
    double denominator = 1.0;
    const std::size_t slash = rest.find('/');
    if (slash != std::string::npos) {
        denominator = parse_real(rest.substr(slash + 1));
        rest = rest.substr(0, slash);
    }
    if (!rest.empty()) numerator = parse_real(rest);
    if (denominator == 0.0) throw std::invalid_argument("zero denominator in exp() argument");
    return std::polar(1.0, sign * numerator * std::numbers::pi / denominator);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string body = strip(text, " ");
    if (body.empty()) throw std::invalid_argument("empty complex literal");

    if (body.rfind("exp(", 0) == 0 && body.back() == ')')
        return parse_exp_form(body.substr(4, body.size() - 5));

    const bool has_i = body.back() == 'i';
    if (!has_i) return Complex{parse_real(body), 0.0};

    body.pop_back();  // trailing 'i'
    // Split at the last top-level sign; signs following an exponent marker
    // belong to the number.
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if ((body[pos] == '+' || body[pos] == '-') &&
            body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            const double re = parse_real(body.substr(0, pos));
            std::string im_text = body.substr(pos);
            if (im_text == "+") im_text = "1";
            if (im_text == "-") im_text = "-1";
            return Complex{re, parse_real(im_text)};
        }
    }
    if (body.empty() || body == "+") return Complex{0.0, 1.0};
    if (body == "-") return Complex{0.0, -1.0};
    return Complex{0.0, parse_real(body)};
}

std::vector<Complex> parse_grid(const std::string& spec) {
    const std::string body = spec.empty() ? "0.1:0.8:0.1x8" : strip(spec, " ");

    std::vector<Complex> grid;
    if (body.rfind("list:", 0) == 0) {
        std::stringstream stream(body.substr(5));
        std::string item;
        while (std::getline(stream, item, ';'))
            if (!item.empty()) grid.push_back(parse_complex(item));
        return grid;
    }

    const std::size_t x_pos = body.find('x');
    const std::string range = (x_pos == std::string::npos) ? body : body.substr(0, x_pos);
    const int phases =
        (x_pos == std::string::npos) ? 8 : static_cast<int>(parse_real(body.substr(x_pos + 1)));
    if (phases < 1) throw std::invalid_argument("grid needs at least one phase");

    const std::size_t c1 = range.find(':');
    const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : range.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid spec must be lo:hi:step[xP] or list:...");
    const double lo = parse_real(range.substr(0, c1));
    const double hi = parse_real(range.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_real(range.substr(c2 + 1));
    if (step <= 0.0) throw std::invalid_argument("grid step must be positive");

    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) {
        const double r = lo + i * step;
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("grid moduli must lie in (0, 1)");
        for (int p = 0; p < phases; ++p)
            grid.push_back(std::polar(r, 2.0 * std::numbers::pi * p / phases));
    }
    return grid;
}

std::string format_complex(Complex z) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();  // drop negative zero
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::ostringstream out;
    out.precision(17);
    out << re;
    if (!(im < 0.0)) out << "+";
    out << im << "i";
    return out.str();
}

}  // namespace hs
