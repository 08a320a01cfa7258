#ifndef CAYT_ERRORS_HPP
#define CAYT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cayt {

// All library failures funnel through Error so callers can branch on kind()
// without string matching.
class Error : public std::runtime_error {
public:
    enum class Kind {
        alphabet_mismatch,
        arity_mismatch,
        malformed_convolution,
        domain,            // word not in the relevant language
        functionality,     // relation produced more than one image
        not_bounded,       // accepting pad-reading cycle
        parse,
        invalid_argument,
        budget_exceeded,
        unsupported,
        invalid_presentation,
        io,
    };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void raise(Error::Kind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace cayt

#endif
