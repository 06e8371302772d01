#include "hg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hg {

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}

Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    std::string num_part = body, den_part = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw std::invalid_argument("malformed rational '" + token +
                                    "': expected n or n/d with decimal digits only");
    }
    Int n(num_part), d(den_part);
    if (d == 0) throw std::invalid_argument("malformed rational '" + token + "': zero denominator");
    if (negative) n = -n;
    Rat x(n, d);
    x.canonicalize();
    return x;
}

std::vector<Rat> parse_tuple(const std::string& csv) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

long to_long_checked(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return x.get_si();
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace hg
