#include "mtasep/numeric.hpp"

#include <stdexcept>

namespace mtasep {

mpz_class binomial(long a, long k) {
    if (a < 0 || k < 0 || k > a) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(k));
    return out;
}

mpz_class multinomial(const std::vector<int>& parts) {
    mpz_class out = 1;
    long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
        out *= binomial(total, p);
    }
    return out;
}

mpq_class pow_q(const mpq_class& q, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    out.canonicalize();
    return out;
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) {
    return q.get_str();
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

}  // namespace mtasep
