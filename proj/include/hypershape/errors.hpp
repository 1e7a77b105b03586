#pragma once

#include <stdexcept>
#include <string>

namespace hypershape {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation that needs at least one occupied voxel got an all-zero image.
class EmptyImageError : public Error {
public:
    explicit EmptyImageError(const std::string& what = "image has no occupied voxels")
        : Error(what) {}
};

// A voxel index lies outside the grid extents.
class OutOfBoundsError : public Error {
public:
    explicit OutOfBoundsError(const std::string& what) : Error(what) {}
};

// An axis has zero width (hi == lo), so equal-width bins cannot be formed.
class DegenerateAxisError : public Error {
public:
    explicit DegenerateAxisError(const std::string& what) : Error(what) {}
};

// bins^n (or a requested extent) exceeds the configured cell budget.
class DimensionTooLargeError : public Error {
public:
    explicit DimensionTooLargeError(const std::string& what) : Error(what) {}
};

// No closed form or membership test exists for the requested shape.
class UnsupportedShapeError : public Error {
public:
    explicit UnsupportedShapeError(const std::string& what) : Error(what) {}
};

// A nonempty list was required.
class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what = "empty input") : Error(what) {}
};

// Malformed CSV input; carries 1-based row/column of the offending cell.
class CsvError : public Error {
public:
    CsvError(const std::string& what, long row, long column)
        : Error(what), row_(row), column_(column) {}
    long row() const { return row_; }
    long column() const { return column_; }

private:
    long row_;
    long column_;
};

}  // namespace hypershape
