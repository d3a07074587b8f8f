#ifndef QMEX_ERRORS_HPP
#define QMEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed gate: wrong angle count, bad qubit list, non-unitary matrix.
struct InvalidGateError : Error {
    using Error::Error;
};

// Vector/matrix/parameter dimension mismatches.
struct DimensionError : Error {
    using Error::Error;
};

// Encoding gate kind not handled by the eigenbasis transform (RX only).
struct UnsupportedEncodingError : Error {
    using Error::Error;
};

// Training loss became non-finite; carries the epoch where it happened.
struct TrainingFailure : Error {
    explicit TrainingFailure(int epoch_)
        : Error("training diverged (non-finite loss) at epoch " + std::to_string(epoch_)),
          epoch(epoch_) {}
    int epoch;
};

// File read/write problem; message includes the path.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qmex

#endif
