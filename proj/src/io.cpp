#include "ghzsym/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ghzsym/error.hpp"

namespace ghzsym {

LoadedMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path);

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::InvalidArgument, path + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("matrix"))
        throw Error(Errc::InvalidArgument, path + ": missing \"matrix\" key");
    const auto& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != kDim)
        throw Error(Errc::InvalidArgument, path + ": \"matrix\" must be an 8x8 array");

    Matrix8 m;
    for (int i = 0; i < kDim; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != kDim)
            throw Error(Errc::InvalidArgument, path + ": \"matrix\" must be an 8x8 array");
        for (int j = 0; j < kDim; ++j) {
            const auto& entry = row[static_cast<size_t>(j)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw Error(Errc::InvalidArgument,
                            path + ": matrix entries must be [re, im] number pairs");
            m.at(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }

    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            throw Error(Errc::InvalidArgument, path + ": \"label\" must be a string");
        label = doc["label"].get<std::string>();
    }

    return LoadedMatrix{make_density_matrix(m), label};
}

void write_matrix_file(const std::string& path, const Matrix8& m, const std::string& label) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IoFailure, "cannot write " + path);
    out << "{\n";
    if (!label.empty()) {
        const nlohmann::json quoted = label; // reuse the library's string escaping
        out << "  \"label\": " << quoted.dump() << ",\n";
    }
    out << "  \"matrix\": [\n";
    for (int i = 0; i < kDim; ++i) {
        out << "    [";
        for (int j = 0; j < kDim; ++j) {
            const Complex z = m.at(i, j);
            out << "[" << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
            if (j + 1 < kDim) out << ", ";
        }
        out << "]" << (i + 1 < kDim ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    if (!out.flush()) throw Error(Errc::IoFailure, "write failed for " + path);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

JsonWriter& JsonWriter::field(const std::string& k, double v) {
    key(k);
    body_ << format_double(v);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const std::string& v) {
    key(k);
    const nlohmann::json quoted = v;
    body_ << quoted.dump();
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const char* v) {
    return field(k, std::string(v));
}

JsonWriter& JsonWriter::field(const std::string& k, bool v) {
    key(k);
    body_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const double* values, int count) {
    key(k);
    body_ << "[";
    for (int i = 0; i < count; ++i) {
        if (i) body_ << ", ";
        body_ << format_double(values[i]);
    }
    body_ << "]";
    return *this;
}

std::string JsonWriter::str() const { return "{" + body_.str() + "\n}"; }

void JsonWriter::key(const std::string& k) {
    body_ << (first_ ? "\n" : ",\n") << "  \"" << k << "\": ";
    first_ = false;
}

} // namespace ghzsym
