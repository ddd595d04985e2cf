#pragma once

// Shared vocabulary for the semibrace library: element indices, the error
// type thrown on unmet preconditions, the structured failure value returned
// by verifiers, and subset masks over a finite carrier.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semibrace {

/// Dense carrier index in [0, n).
using Elem = std::uint32_t;

/// Error classes. The numeric values are the CLI exit codes.
enum class ErrorKind : int {
  validation = 1,
  hypothesis = 2,
  cap        = 3,
  io         = 4,
  internal   = 70
};

/// Thrown when a precondition is not met or an internal self-check fails.
/// `code` is a short machine-readable name such as "RhoNotAntihomomorphism".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, std::string const& detail)
      : std::runtime_error(code + ": " + detail),
        _kind(kind),
        _code(std::move(code)) {}

  ErrorKind kind() const noexcept { return _kind; }
  std::string const& code() const noexcept { return _code; }

 private:
  ErrorKind   _kind;
  std::string _code;
};

/// A failed verification: which law broke and the elements that witness it.
struct Failure {
  std::string       code;
  std::vector<Elem> witness;
  std::string       detail;

  std::string to_string() const {
    std::ostringstream os;
    os << code;
    if (!witness.empty()) {
      os << '(';
      for (std::size_t k = 0; k < witness.size(); ++k) {
        os << (k ? "," : "") << witness[k];
      }
      os << ')';
    }
    if (!detail.empty()) {
      os << ": " << detail;
    }
    return os.str();
  }
};

/// Either a verified value or the reason verification failed.
template <typename T>
class Checked {
 public:
  Checked(T value) : _state(std::move(value)) {}        // NOLINT
  Checked(Failure failure) : _state(std::move(failure)) {}  // NOLINT

  bool ok() const noexcept { return std::holds_alternative<T>(_state); }
  explicit operator bool() const noexcept { return ok(); }

  T const& value() const& {
    if (!ok()) {
      throw Error(ErrorKind::validation, failure().code, failure().to_string());
    }
    return std::get<T>(_state);
  }
  T&& value() && {
    if (!ok()) {
      throw Error(ErrorKind::validation, failure().code, failure().to_string());
    }
    return std::get<T>(std::move(_state));
  }
  Failure const& failure() const { return std::get<Failure>(_state); }

 private:
  std::variant<T, Failure> _state;
};

/// Membership flags over a carrier of fixed size.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t n) : _flags(n, 0) {}
  SubsetMask(std::size_t n, std::initializer_list<Elem> members) : _flags(n, 0) {
    for (Elem x : members) {
      insert(x);
    }
  }
  SubsetMask(std::size_t n, std::vector<Elem> const& members) : _flags(n, 0) {
    for (Elem x : members) {
      insert(x);
    }
  }

  static SubsetMask full(std::size_t n) {
    SubsetMask m(n);
    std::fill(m._flags.begin(), m._flags.end(), 1);
    return m;
  }

  std::size_t universe() const noexcept { return _flags.size(); }

  void insert(Elem x) {
    if (x >= _flags.size()) {
      throw Error(ErrorKind::validation, "RangeError",
                  "subset member " + std::to_string(x) + " outside carrier of size "
                      + std::to_string(_flags.size()));
    }
    _flags[x] = 1;
  }

  bool contains(Elem x) const noexcept { return x < _flags.size() && _flags[x]; }

  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::count(_flags.begin(), _flags.end(), 1));
  }
  bool empty() const noexcept { return count() == 0; }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < _flags.size(); ++x) {
      if (_flags[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_subset_of(SubsetMask const& other) const {
    for (Elem x = 0; x < _flags.size(); ++x) {
      if (_flags[x] && !other.contains(x)) {
        return false;
      }
    }
    return true;
  }

  SubsetMask intersect(SubsetMask const& other) const {
    SubsetMask out(_flags.size());
    for (Elem x = 0; x < _flags.size(); ++x) {
      if (_flags[x] && other.contains(x)) {
        out._flags[x] = 1;
      }
    }
    return out;
  }

  friend bool operator==(SubsetMask const&, SubsetMask const&) = default;

 private:
  std::vector<char> _flags;
};

inline std::string format_elems(std::vector<Elem> const& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < xs.size(); ++k) {
    os << (k ? "," : "") << xs[k];
  }
  os << '}';
  return os.str();
}

}  // namespace semibrace
