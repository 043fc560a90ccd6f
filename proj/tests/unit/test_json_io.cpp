#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "ineqlab/json_io.hpp"
#include "ineqlab/random.hpp"

using namespace ineqlab;

TEST(JsonIo, MatrixRoundTripIsBitExact) {
    GaussianSource g(51);
    for (std::size_t n : {1u, 2u, 7u}) {
        ComplexMatrix m = g.ginibre(n);
        m(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -0.1);
        if (n > 1) m(1, 0) = Complex(1e308, std::nextafter(1.0, 2.0));
        const std::string text = matrix_to_json(m).dump();
        EXPECT_EQ(matrix_from_json(nlohmann::json::parse(text)), m);
    }
}

TEST(JsonIo, VectorRoundTripAndShape) {
    GaussianSource g(52);
    const ComplexVector v = g.gaussian_vector(5);
    const nlohmann::json doc = vector_to_json(v);
    EXPECT_EQ(doc["rows"], 5);
    EXPECT_EQ(doc["cols"], 1);
    EXPECT_EQ(vector_from_json(nlohmann::json::parse(doc.dump())), v);
}

TEST(JsonIo, ImaginaryPartOptional) {
    const auto doc = nlohmann::json::parse(R"({"rows": 2, "cols": 2, "re": [[0, 1], [0, 0]]})");
    const ComplexMatrix m = matrix_from_json(doc);
    EXPECT_EQ(m, ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
}

TEST(JsonIo, MalformedInputs) {
    const char* bad[] = {
        R"([1, 2])",
        R"({"rows": 2, "cols": 2})",
        R"({"rows": 2, "cols": 2, "re": [[0, 1]]})",
        R"({"rows": 2, "cols": 2, "re": [[0, 1], [0]]})",
        R"({"rows": 2, "cols": 2, "re": [[0, 1], [0, "x"]]})",
        R"({"rows": 0, "cols": 2, "re": []})",
        R"({"rows": 1, "cols": 1, "re": [[1]], "im": [[1, 2]]})",
    };
    for (const char* text : bad) EXPECT_THROW(matrix_from_json(nlohmann::json::parse(text)), InputError) << text;
    EXPECT_THROW(vector_from_json(nlohmann::json::parse(R"({"rows": 1, "cols": 2, "re": [[1, 2]]})")), InputError);
}

TEST(JsonIo, Files) {
    const auto dir = std::filesystem::temp_directory_path() / "ineqlab_json_io_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "nested" / "m.json";
    const auto m = ComplexMatrix::from_rows({{Complex(0.25, -3.0)}});
    write_text_file(path, matrix_to_json(m).dump());
    EXPECT_EQ(matrix_from_json(read_json_file(path)), m);
    EXPECT_THROW(read_json_file(dir / "missing.json"), InputError);
    write_text_file(dir / "broken.json", "{not json");
    EXPECT_THROW(read_json_file(dir / "broken.json"), InputError);
    std::filesystem::remove_all(dir);
}
