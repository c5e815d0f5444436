#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "sgp/errors.hpp"
#include "sgp/io.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/structure.hpp"

using namespace sgp;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("table files round trip") {
    Semigroup ac2 = build_named("AC2");
    save_sgp("io_scratch_ac2.sgp", ac2);
    Semigroup back = load_sgp("io_scratch_ac2.sgp");
    CHECK(back.n == 6);
    CHECK(back.table == ac2.table);
    CHECK(back.labels == ac2.labels);
    std::remove("io_scratch_ac2.sgp");

    Semigroup plain = from_table({{0, 0}, {0, 0}});
    save_sgp("io_scratch_plain.sgp", plain);
    Semigroup plain_back = load_sgp("io_scratch_plain.sgp");
    CHECK(plain_back.n == 2);
    CHECK(!plain_back.has_labels());
    std::remove("io_scratch_plain.sgp");
}

TEST_CASE("table file rejection") {
    CHECK_THROWS_AS(load_sgp("io_scratch_missing.sgp"), IoError);
    TempFile bad_head("io_scratch_a.sgp", "2 3\n0 0\n0 0\n");
    CHECK_THROWS_AS(load_sgp(bad_head.path), IoError);
    TempFile short_row("io_scratch_b.sgp", "2\n0 0\n0\n");
    CHECK_THROWS_AS(load_sgp(short_row.path), IoError);
    TempFile garbage("io_scratch_c.sgp", "2\n0 0\n0 0\nextra\n");
    CHECK_THROWS_AS(load_sgp(garbage.path), IoError);
    TempFile late_garbage("io_scratch_d.sgp", "2\n0 0\n0 0\nlabels: p q\nmore\n");
    CHECK_THROWS_AS(load_sgp(late_garbage.path), IoError);
    TempFile non_numeric("io_scratch_e.sgp", "2\n0 z\n0 0\n");
    CHECK_THROWS_AS(load_sgp(non_numeric.path), IoError);
    TempFile out_of_range("io_scratch_f.sgp", "2\n0 7\n0 0\n");
    CHECK_THROWS_AS(load_sgp(out_of_range.path), IndexOutOfRange);
    TempFile skew("io_scratch_g.sgp", "2\n1 1\n1 0\n");
    CHECK_THROWS_AS(load_sgp(skew.path), NonAssociative);
    TempFile label_count("io_scratch_h.sgp", "2\n0 0\n0 0\nlabels: p\n");
    CHECK_THROWS_AS(load_sgp(label_count.path), IoError);
}

TEST_CASE("rees files") {
    TempFile nine("io_scratch_nine.rees", "group C2\ndims 2 2\n1 1\n0 1\n");
    ReesSpec spec = load_rees_file(nine.path);
    CHECK(spec.group.n == 2);
    CHECK(spec.identity == 0);
    CHECK(spec.rows == 2);
    CHECK(spec.cols == 2);
    CHECK(spec.sandwich == std::vector<std::vector<int>>{{0, 0}, {-1, 0}});
    CHECK(rees_semigroup(spec).n == 9);

    // group given as a table file, resolved next to the .rees file
    save_sgp("io_scratch_c2.sgp", build_named("C2"));
    TempFile by_path("io_scratch_bypath.rees",
                     "group io_scratch_c2.sgp\ndims 2 2\nc c\n0 c\n");
    ReesSpec twisted = load_rees_file(by_path.path);
    CHECK(twisted.sandwich == std::vector<std::vector<int>>{{1, 1}, {-1, 1}});
    std::remove("io_scratch_c2.sgp");
}

TEST_CASE("rees file rejection") {
    TempFile zero_label_group("io_scratch_zg.sgp",
                              "2\n0 1\n1 0\nlabels: 0 x\n");
    TempFile ambiguous("io_scratch_amb.rees",
                       "group io_scratch_zg.sgp\ndims 1 1\nx\n");
    CHECK_THROWS_AS(load_rees_file(ambiguous.path), IoError);

    save_sgp("io_scratch_unlabeled.sgp", from_table({{0, 1}, {1, 0}}));
    TempFile unlabeled("io_scratch_unl.rees",
                       "group io_scratch_unlabeled.sgp\ndims 1 1\n1\n");
    CHECK_THROWS_AS(load_rees_file(unlabeled.path), IoError);
    std::remove("io_scratch_unlabeled.sgp");

    TempFile bad_token("io_scratch_tok.rees", "group C2\ndims 2 2\n1 1\n0 q\n");
    CHECK_THROWS_AS(load_rees_file(bad_token.path), IoError);
    TempFile bad_dims("io_scratch_dim.rees", "group C2\ndims 2 2\n1 1\n");
    CHECK_THROWS_AS(load_rees_file(bad_dims.path), IoError);
    TempFile wide_row("io_scratch_wide.rees", "group C2\ndims 2 2\n1 1 1\n0 1\n");
    CHECK_THROWS_AS(load_rees_file(wide_row.path), IoError);
    TempFile bad_head("io_scratch_head.rees", "semigroup C2\ndims 2 2\n1 1\n0 1\n");
    CHECK_THROWS_AS(load_rees_file(bad_head.path), IoError);
    // a non-group multiplication behind a valid file shape: no identity exists
    save_sgp("io_scratch_lz.sgp", build_named("leftzero:2"));
    TempFile not_group("io_scratch_ng.rees",
                       "group io_scratch_lz.sgp\ndims 1 1\nl1\n");
    CHECK_THROWS_AS(load_rees_file(not_group.path), InvalidSpec);
    std::remove("io_scratch_lz.sgp");
}

TEST_CASE("expression resolution") {
    CHECK(resolve_input("AC2").n == 6);
    CHECK(resolve_input(" A2 ").n == 5);
    CHECK(resolve_input("product(A2, C2)").n == 10);
    CHECK(resolve_input("product(product(A2, C2), C2)").n == 20);

    TempFile nine("io_scratch_res.rees", "group C2\ndims 2 2\n1 1\n0 1\n");
    CHECK(resolve_input("io_scratch_res.rees").n == 9);
    CHECK(resolve_input("rees(io_scratch_res.rees)").n == 9);
    CHECK(resolve_input("product(rees(io_scratch_res.rees), C2)").n == 18);

    save_sgp("io_scratch_res.sgp", build_named("A0"));
    CHECK(resolve_input("io_scratch_res.sgp").n == 4);
    std::remove("io_scratch_res.sgp");

    CHECK_THROWS_AS(resolve_input("nosuch"), UnknownName);
    CHECK_THROWS_AS(resolve_input(""), IoError);
    CHECK_THROWS_AS(resolve_input("product(A2)"), IoError);
    CHECK_THROWS_AS(resolve_input("frob(A2)"), IoError);
}
