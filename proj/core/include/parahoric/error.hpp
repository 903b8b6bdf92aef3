#pragma once

#include <stdexcept>
#include <string>

namespace parahoric {

// Base of every error the library throws.  The subclasses map onto the
// distinct failure modes callers are expected to branch on.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };
class ArgumentError : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class ConsistencyError : public Error { public: using Error::Error; };
class UnsupportedError : public Error { public: using Error::Error; };
class PrecisionError : public Error { public: using Error::Error; };
class AmbiguityError : public Error { public: using Error::Error; };
class DivergenceError : public Error { public: using Error::Error; };

} // namespace parahoric
