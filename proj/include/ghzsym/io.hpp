#pragma once

#include <sstream>
#include <string>

#include "ghzsym/linalg.hpp"

namespace ghzsym {

struct LoadedMatrix {
    DensityMatrix state;
    std::string label;
};

/// Reads a JSON document {"matrix": 8x8 array of [re, im] pairs,
/// "label": optional string} and validates it into a density matrix.
/// Throws IoFailure when the file cannot be read, InvalidArgument on
/// malformed JSON or wrong shape, and the density-matrix validation
/// errors otherwise.
LoadedMatrix load_matrix_file(const std::string& path);

/// Writes the matrix in the schema load_matrix_file reads. The matrix is
/// not validated so tests can produce deliberately broken inputs.
void write_matrix_file(const std::string& path, const Matrix8& m, const std::string& label = "");

/// Decimal form with enough digits to identify the double (15 significant
/// digits); never scientific "nan"/"inf" since reports hold finite values.
std::string format_double(double v);

/// Minimal ordered JSON object writer for report emission. Field order is
/// insertion order; values are doubles, strings, booleans or flat arrays.
class JsonWriter {
  public:
    JsonWriter& field(const std::string& key, double v);
    JsonWriter& field(const std::string& key, const std::string& v);
    JsonWriter& field(const std::string& key, const char* v);
    JsonWriter& field(const std::string& key, bool v);
    JsonWriter& field(const std::string& key, const double* values, int count);

    std::string str() const;

  private:
    void key(const std::string& k);

    std::ostringstream body_;
    bool first_ = true;
};

} // namespace ghzsym
