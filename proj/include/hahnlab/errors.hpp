#ifndef HAHNLAB_ERRORS_HPP
#define HAHNLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahnlab {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A gamma function or Pochhammer denominator hit a pole.
class pole_error : public error {
public:
    using error::error;
};

/// Arguments outside the domain of an operation (e.g. Re(alpha) <= 0).
class domain_error : public error {
public:
    using error::error;
};

/// A value left the representable double range.
class overflow_error : public error {
public:
    using error::error;
};

/// Adaptive quadrature failed to meet its tolerance.
class quadrature_error : public error {
public:
    using error::error;
};

/// An exact identity that must hold structurally did not.
class identity_error : public error {
public:
    using error::error;
};

/// Malformed user input (number grammar, CLI values).
class parse_error : public error {
public:
    using error::error;
};

} // namespace hahnlab

#endif
