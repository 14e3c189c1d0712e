#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"

using namespace lietrans;

namespace {

std::vector<Complex> random_values(std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = {support::uniform(-3, 3), support::uniform(-3, 3)};
    return v;
}

TEST(IO, SamplesCsvRoundTrip) {
    const GridSpec spec{{3, 2}};
    const auto grid = grid_points(AlgebraId::C2xA1, spec, Family::C);
    const auto values = random_values(grid.size());
    std::stringstream ss;
    io::write_samples_csv(ss, grid, values);
    auto samples = io::read_samples(ss);
    std::reverse(samples.begin(), samples.end()); // order must not matter
    EXPECT_EQ(io::align_samples(samples, grid), values);
}

TEST(IO, SamplesJsonRoundTrip) {
    const GridSpec spec{{4}};
    const auto grid = grid_points(AlgebraId::B3, spec, Family::E);
    const auto values = random_values(grid.size());
    std::stringstream ss;
    ss << io::samples_json(AlgebraId::B3, spec, Family::E, grid, values).dump();
    EXPECT_EQ(io::align_samples(io::read_samples(ss), grid), values);
}

TEST(IO, SampleAlignmentErrors) {
    const auto grid = grid_points(AlgebraId::A3, {{2}}, Family::C);
    std::vector<io::Sample> samples;
    for (const auto& p : grid) samples.push_back({p.s, 1.0});
    EXPECT_NO_THROW(io::align_samples(samples, grid));

    auto shorter = samples;
    shorter.pop_back();
    EXPECT_THROW(io::align_samples(shorter, grid), data_error);

    auto dup = samples;
    dup.back() = dup.front();
    EXPECT_THROW(io::align_samples(dup, grid), data_error);

    auto stray = samples;
    stray.back().s = {9, 9, 9};
    EXPECT_THROW(io::align_samples(stray, grid), data_error);
}

TEST(IO, MalformedInput) {
    const auto bad = [](const std::string& text) {
        std::istringstream in(text);
        return io::read_samples(in);
    };
    EXPECT_THROW(bad(""), data_error);
    EXPECT_THROW(bad("a,b,c\n1,2,3\n"), data_error);
    EXPECT_THROW(bad("s1,s2,s3,re,im\n1,2,3,0.5\n"), data_error);
    EXPECT_THROW(bad("s1,s2,s3,re,im\n1,2,x,0.5,0\n"), data_error);
    EXPECT_THROW(bad("s1,s2,s3,re,im\n1.5,2,3,0.5,0\n"), data_error);
    EXPECT_THROW(bad("{\"samples\": [ {\"s\": [1,2]"), data_error);
    EXPECT_THROW(bad("{\"samples\": [ {\"s\": [1,2,3]} ]}"), data_error);
    EXPECT_THROW(bad("{\"points\": []}"), data_error);

    // comments, blank lines and CRLF are accepted
    const auto ok = bad("# generated\n\ns1,s2,s3,re,im\r\n0,0,0,1,0\r\n");
    ASSERT_EQ(ok.size(), 1u);
    EXPECT_EQ(ok[0].value, Complex(1, 0));
}

TEST(IO, SpectrumRoundTrip) {
    DiscreteTransform t(AlgebraId::G2xA1, {{7, 3}}, Family::S);
    const Spectrum s = t.forward(random_values(t.grid().size()));

    std::stringstream csv;
    io::write_spectrum_csv(csv, s);
    const Spectrum a = io::read_spectrum_csv(csv, AlgebraId::G2xA1, Family::S, s.spec);
    EXPECT_EQ(a.weights, s.weights);
    EXPECT_EQ(a.coeffs, s.coeffs);
    EXPECT_EQ(a.norms, s.norms);

    const Spectrum b = io::spectrum_from_json(io::json::parse(io::spectrum_json(s).dump()));
    EXPECT_EQ(b.algebra, s.algebra);
    EXPECT_EQ(b.family, s.family);
    EXPECT_EQ(b.spec, s.spec);
    EXPECT_EQ(b.weights, s.weights);
    EXPECT_EQ(b.coeffs, s.coeffs);

    EXPECT_THROW(io::spectrum_from_json(io::json{{"algebra", "E8"}, {"family", "C"}, {"terms", io::json::array()}}),
                 data_error);
    EXPECT_THROW(io::spectrum_from_json(io::json{{"family", "C"}}), data_error);
}

TEST(IO, PointsCsv) {
    std::istringstream x("x1,x2,x3\n0.25,0.5,0\n");
    const auto px = io::read_points_csv(x);
    ASSERT_EQ(px.size(), 1u);
    EXPECT_EQ(px[0], (Vec3d{0.25, 0.5, 0}));

    std::istringstream s("s1,s2,s3\n1,2,3\n");
    const auto ps = io::read_points_csv(s, Vec3<int>{4, 4, 6});
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0], (Vec3d{0.25, 0.5, 0.5}));

    std::istringstream s2("s1,s2,s3\n1,2,3\n");
    EXPECT_THROW(io::read_points_csv(s2), data_error);
}

TEST(IO, GridAndLambdaExport) {
    const GridSpec spec{{2, 3}};
    const auto grid = grid_points(AlgebraId::A2xA1, spec, Family::C);
    std::stringstream g;
    io::write_grid_csv(g, grid);
    std::size_t lines = 0;
    for (std::string l; std::getline(g, l);) ++lines;
    EXPECT_EQ(lines, grid.size() + 1);

    const auto j = io::grid_json(AlgebraId::A2xA1, spec, Family::C, grid);
    EXPECT_EQ(j["points"].size(), grid.size());
    EXPECT_EQ(j["points"][0]["x"].size(), 3u);

    const auto ws = lambda_set(AlgebraId::A2xA1, spec, Family::C);
    DiscreteTransform t(AlgebraId::A2xA1, spec, Family::C);
    std::stringstream l;
    io::write_lambda_csv(l, t.weights(), t.norms());
    EXPECT_EQ(io::lambda_json(AlgebraId::A2xA1, spec, Family::C, t.weights(), t.norms())["weights"].size(),
              ws.weights.size());
}

TEST(IO, MatrixCacheRoundTrip) {
    DiscreteTransform t(AlgebraId::C3, {{4}}, Family::E);
    const TransformMatrix m = t.matrix();
    std::stringstream ss;
    io::write_matrix_cache(ss, m);
    const TransformMatrix r = io::read_matrix_cache(ss);
    EXPECT_EQ(r.algebra, m.algebra);
    EXPECT_EQ(r.family, m.family);
    EXPECT_EQ(r.spec, m.spec);
    EXPECT_EQ(r.weights, m.weights);
    EXPECT_EQ(r.grid_indices, m.grid_indices);
    EXPECT_EQ(r.B, m.B);

    const auto f = random_values(t.grid().size());
    EXPECT_EQ(r.apply(f).coeffs, m.apply(f).coeffs);

    std::string bytes = ss.str();
    std::istringstream truncated(bytes.substr(0, bytes.size() - 5));
    EXPECT_THROW(io::read_matrix_cache(truncated), data_error);
    std::istringstream garbage("not json\n");
    EXPECT_THROW(io::read_matrix_cache(garbage), data_error);
}

TEST(IO, CachedMatrixRebuildsOnKeyMismatch) {
    const auto path = (std::filesystem::temp_directory_path() / "lietrans_io_test.cache").string();
    std::filesystem::remove(path);
    const auto a = io::cached_matrix(path, AlgebraId::A3, {{3}}, Family::C);
    EXPECT_TRUE(std::filesystem::exists(path));
    const auto b = io::cached_matrix(path, AlgebraId::A3, {{3}}, Family::C);
    EXPECT_EQ(a.B, b.B);
    const auto c = io::cached_matrix(path, AlgebraId::B3, {{3}}, Family::C);
    EXPECT_EQ(c.algebra, AlgebraId::B3);
    std::filesystem::remove(path);
}

} // namespace
