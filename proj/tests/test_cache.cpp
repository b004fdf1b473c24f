#include "hsop/cache.hpp"
#include "hsop/combinatorics.hpp"
#include "hsop/series.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace hsop;
namespace fs = std::filesystem;

namespace {

class CacheDir : public ::testing::Test {
protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("hsop-cache-test-" + std::to_string(rd()));
        PersistentStore::instance().set_directory(dir_);
        detail::ferrers_cache().clear();
        detail::pb_cache().clear();
    }
    void TearDown() override {
        PersistentStore::instance().set_directory(std::nullopt);
        detail::ferrers_cache().clear();
        detail::pb_cache().clear();
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    fs::path file(const std::string& key) const { return dir_ / PersistentStore::file_name(key); }

    std::string slurp(const std::string& key) const { return oracle::read_file(file(key).string()); }

    void overwrite(const std::string& key, const std::string& text) const {
        std::ofstream(file(key), std::ios::binary | std::ios::trunc) << text;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CacheDir, RoundTrip) {
    auto& store = PersistentStore::instance();
    EXPECT_FALSE(store.load("absent").has_value());
    store.store("k", "line one\nline two\n");
    ASSERT_TRUE(fs::exists(file("k")));
    EXPECT_EQ(store.load("k"), std::optional<std::string>("line one\nline two\n"));
    store.store("k", "replaced\n");
    EXPECT_EQ(store.load("k"), std::optional<std::string>("replaced\n"));
}

TEST_F(CacheDir, DisabledStoreIsInert) {
    auto& store = PersistentStore::instance();
    store.set_directory(std::nullopt);
    store.store("k", "x\n");
    EXPECT_FALSE(store.load("k").has_value());
    EXPECT_FALSE(fs::exists(file("k")));
}

TEST_F(CacheDir, DamagedFilesAreIgnored) {
    auto& store = PersistentStore::instance();
    store.store("k", "12345\n");
    const std::string good = slurp("k");

    std::string flipped = good;
    flipped[flipped.find("12345")] = '9';
    overwrite("k", flipped);
    EXPECT_FALSE(store.load("k").has_value()) << "checksum mismatch";

    overwrite("k", good.substr(0, good.size() / 2));
    EXPECT_FALSE(store.load("k").has_value()) << "truncated";

    std::string version = good;
    version.replace(0, version.find('\n'), "hsop-cache 999");
    overwrite("k", version);
    EXPECT_FALSE(store.load("k").has_value()) << "other format version";

    // A valid file stored under one key does not satisfy another.
    store.store("other", "12345\n");
    fs::copy_file(file("other"), file("k"), fs::copy_options::overwrite_existing);
    EXPECT_FALSE(store.load("k").has_value()) << "key mismatch";

    overwrite("k", "");
    EXPECT_FALSE(store.load("k").has_value()) << "empty";
}

TEST_F(CacheDir, FerrersRowsPersistAndReload) {
    const Integer want = oracle::invariant_dim(11, 12);
    EXPECT_EQ(invariant_dim(11, 12), want);
    ASSERT_TRUE(fs::exists(file("ferrers_11_12")));
    detail::ferrers_cache().clear();
    EXPECT_EQ(invariant_dim(11, 12), want);
    EXPECT_EQ(invariant_dim(12, 11), want);
}

TEST_F(CacheDir, CorruptFerrersRowIsRecomputed) {
    const Integer want = oracle::invariant_dim(10, 12);
    EXPECT_EQ(invariant_dim(10, 12), want);
    const std::string good = slurp("ferrers_10_12");

    // Bad checksum.
    std::string bad = good;
    bad[bad.find('\n', bad.find('\n') + 1) + 1] = '7';
    overwrite("ferrers_10_12", bad);
    detail::ferrers_cache().clear();
    EXPECT_EQ(invariant_dim(10, 12), want);
    EXPECT_EQ(slurp("ferrers_10_12"), good) << "rewritten after recompute";

    // Valid checksum, unusable payload.
    PersistentStore::instance().store("ferrers_10_12", "1\n2\n");
    detail::ferrers_cache().clear();
    EXPECT_EQ(invariant_dim(10, 12), want);
    PersistentStore::instance().store("ferrers_10_12", "not a number\n");
    detail::ferrers_cache().clear();
    EXPECT_EQ(invariant_dim(10, 12), want);
}

TEST_F(CacheDir, PbPolynomialPersistsAndRejectsWrongValues) {
    const IntPolynomial want = pb_polynomial(9);
    ASSERT_TRUE(fs::exists(file("pb_9")));
    detail::pb_cache().clear();
    EXPECT_EQ(pb_polynomial(9), want);

    // A well-formed file with the wrong polynomial fails the series check.
    PersistentStore::instance().store("pb_9", "0:1,3:5");
    detail::pb_cache().clear();
    EXPECT_EQ(pb_polynomial(9), want);
    PersistentStore::instance().store("pb_9", "garbage");
    detail::pb_cache().clear();
    EXPECT_EQ(pb_polynomial(9), want);
    EXPECT_EQ(PersistentStore::instance().load("pb_9"), std::optional<std::string>(want.to_pairs()));
}
