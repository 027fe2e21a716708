#include <gtest/gtest.h>

#include <sstream>

#include "lrs/lrs.hpp"
#include "support/oracles.hpp"

using namespace lrs;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string strip_wall(const std::string& csv) {
    std::string out;
    for (const auto& line : lines_of(csv)) {
        if (line.starts_with("#")) continue;
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

} // namespace

TEST(Generate, MultisetHonorsCap) {
    const auto inst = gen_string({8, 4, 2, Distribution::ShuffledMultiset, 3});
    const OccIndex occ(inst);
    EXPECT_EQ(inst.alphabet_size(), 4u);
    for (Symbol a = 0; a < 4; ++a) EXPECT_EQ(occ.positions(a).size(), 2u);
}

TEST(Generate, UniformHonorsCap) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto inst = gen_string({20, 6, 4, Distribution::Uniform, s});
        EXPECT_EQ(inst.size(), 20u);
        EXPECT_LE(inst.alphabet_size(), 6u);
        EXPECT_LE(OccIndex(inst).max_occ(), 4u);
    }
}

TEST(Generate, Deterministic) {
    const GenSpec spec{30, 5, std::nullopt, Distribution::ShuffledMultiset, 17};
    EXPECT_EQ(gen_string(spec).to_text(), gen_string(spec).to_text());
    auto other = spec;
    other.seed = 18;
    EXPECT_NE(gen_string(spec).to_text(), gen_string(other).to_text());
}

TEST(Generate, Infeasible) {
    auto kind = [](GenSpec spec) {
        try {
            gen_string(spec);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IoError;
    };
    EXPECT_EQ(kind({9, 4, 2, Distribution::ShuffledMultiset, 1}), ErrorKind::ParameterError);
    EXPECT_EQ(kind({0, 4, std::nullopt, Distribution::Uniform, 1}), ErrorKind::ParameterError);
    EXPECT_EQ(kind({3, 4, std::nullopt, Distribution::ShuffledMultiset, 1}), ErrorKind::ParameterError);
}

TEST(Scaffold, ContigExample) {
    const auto rep = scaffold(Instance::from_string("y1 y1 y2 y1 y4 y2 y4 y3 y3"));
    ASSERT_EQ(rep.runs.size(), 3u);
    EXPECT_EQ(rep.runs[0].contig, "y1");
    EXPECT_EQ(rep.runs[0].first_bin, 1u);
    EXPECT_EQ(rep.runs[0].last_bin, 4u);
    EXPECT_EQ(rep.runs[0].selected, (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(rep.runs[1].contig, "y4");
    EXPECT_EQ(rep.runs[1].selected, (std::vector<std::size_t>{5, 7}));
    EXPECT_EQ(rep.runs[2].contig, "y3");
    EXPECT_EQ(rep.runs[2].first_bin, 8u);
    EXPECT_EQ(rep.runs[2].last_bin, 9u);
    EXPECT_EQ(rep.dropped, (std::vector<std::size_t>{3, 6}));
    EXPECT_EQ(format_scaffold(rep),
              "length 7\nrun y1 bins 1-4 selected 1,2,4\nrun y4 bins 5-7 selected 5,7\n"
              "run y3 bins 8-9 selected 8,9\ndropped 3,6\n");
}

TEST(Scaffold, SingleContig) {
    const auto rep = scaffold(Instance::from_string("c c c c"));
    ASSERT_EQ(rep.runs.size(), 1u);
    EXPECT_EQ(rep.runs[0].first_bin, 1u);
    EXPECT_EQ(rep.runs[0].last_bin, 4u);
    EXPECT_TRUE(rep.dropped.empty());
}

TEST(Scaffold, LengthsMatchDp) {
    for (const auto& inst : oracle::random_corpus(61, 100)) {
        const auto rep = scaffold(inst);
        std::size_t covered = 0;
        for (const auto& r : rep.runs) covered += r.selected.size();
        EXPECT_EQ(covered, solve_subset_dp(inst).solution.length());
        EXPECT_EQ(covered + rep.dropped.size(), inst.size());
    }
}

TEST(Bench, CsvRow) {
    const BenchRecord rec{"mld", 40, 12, std::nullopt, 3, 9, 10, 77, "yes", 9, 1.5};
    EXPECT_EQ(to_csv(rec), "mld,40,12,,3,9,10,77,yes,9,1.500");
}

TEST(Bench, ScalingRRowCount) {
    std::ostringstream out;
    const auto rows = run_bench(BenchSuite::ScalingR, 5, {1, 2, false}, out);
    EXPECT_EQ(rows, 7u);
    const auto lines = lines_of(out.str());
    std::size_t data = 0;
    bool header = false;
    for (const auto& l : lines) {
        if (l.starts_with("#")) continue;
        if (l == bench_header) {
            header = true;
            continue;
        }
        ++data;
    }
    EXPECT_TRUE(header);
    EXPECT_EQ(data, 7u);
}

TEST(Bench, DpVsMldAgrees) {
    std::ostringstream out;
    run_bench(BenchSuite::DpVsMld, 9, {1, 20, false}, out);
    EXPECT_EQ(out.str().find("disagree"), std::string::npos);
    EXPECT_NE(out.str().find("agree"), std::string::npos);
}

TEST(Bench, DeterministicModuloWallTime) {
    std::ostringstream a, b, c;
    run_bench(BenchSuite::ScalingN, 4, {1, 2, false}, a);
    run_bench(BenchSuite::ScalingN, 4, {1, 2, false}, b);
    run_bench(BenchSuite::ScalingN, 4, {1, 2, true}, c);
    EXPECT_EQ(strip_wall(a.str()), strip_wall(b.str()));
    auto sorted = [](const std::string& s) {
        auto v = lines_of(s);
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(strip_wall(a.str())), sorted(strip_wall(c.str())));
}
