#include "parahoric/rat.hpp"
#include "parahoric/errors.hpp"

#include <cctype>
#include <limits>

namespace parahoric {

const char *kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotInAmbient: return "NotInAmbient";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotParahoric: return "NotParahoric";
    case ErrorKind::ZeroConnection: return "ZeroConnection";
    case ErrorKind::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::ZeroSemisimplePart: return "ZeroSemisimplePart";
    case ErrorKind::NonCommutingList: return "NonCommutingList";
    case ErrorKind::NotCartan: return "NotCartan";
    case ErrorKind::NotNilpotentLeading: return "NotNilpotentLeading";
    case ErrorKind::NotIntegerWeight: return "NotIntegerWeight";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::FieldExtensionNeeded: return "FieldExtensionNeeded";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

static bool valid_int(const std::string &s, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rat parse_rat(const std::string &text)
{
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        fail(ErrorKind::ParseError, "malformed rational \"" + text + "\"");
    if (num[0] == '+')
        num = num.substr(1);
    Int n(num, 10), d(den, 10);
    if (d == 0)
        fail(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat &r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat floor_rat(const Rat &r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

Rat frac_rat(const Rat &r) { return r - floor_rat(r); }

bool is_integer(const Rat &r) { return r.get_den() == 1; }

std::int64_t to_i64(const Rat &r)
{
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        fail(ErrorKind::ExponentOverflow, "rational " + rat_str(r) + " is not a machine integer");
    return r.get_num().get_si();
}

Int lcm(const Int &a, const Int &b)
{
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Rat make_rat(std::int64_t p, std::int64_t q)
{
    if (q == 0)
        fail(ErrorKind::ZeroInverse, "zero denominator");
    Rat r(Int(static_cast<long>(p)), Int(static_cast<long>(q)));
    r.canonicalize();
    return r;
}

} // namespace parahoric
