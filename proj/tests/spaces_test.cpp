#include <stdexcept>

#include <gtest/gtest.h>

#include <hopcum/spaces.hpp>

using namespace hopcum;

TEST(Spaces, FiniteMeasureRejectsBadWeights) {
    EXPECT_THROW(finite_measure_space({}), std::invalid_argument);
    EXPECT_THROW(finite_measure_space({Scalar(1, 2), Scalar(1, 3)}), std::invalid_argument);
    EXPECT_THROW(finite_measure_space({Scalar(3, 2), Scalar(-1, 2)}), std::invalid_argument);
    EXPECT_NO_THROW(finite_measure_space({Scalar(1)}));
}

TEST(Spaces, MatrixTraceSizes) {
    EXPECT_THROW(matrix_trace_space(1), std::invalid_argument);
    EXPECT_THROW(matrix_trace_space(4), std::invalid_argument);
    const ProbabilitySpace p = matrix_trace_space(3);
    EXPECT_EQ(p.space().dim(), 9u);
    EXPECT_EQ(p.space().label(5), "E23");
    // E23·E31 = E21
    EXPECT_EQ(p.product().at(3, 5 * 9 + 6), Scalar(1));
    EXPECT_EQ(p.expectation().at(0, 4), Scalar(1, 3));
    EXPECT_EQ(p.expectation().at(0, 1), Scalar(0));
}

TEST(Spaces, TwoTermComplex) {
    const ProbabilitySpace p = two_term_complex_space();
    EXPECT_TRUE(p.is_graded());
    EXPECT_EQ(p.space().degrees(), (std::vector<int>{0, 0, -1}));
    ASSERT_TRUE(p.differential().has_value());
    EXPECT_EQ(p.differential()->at(1, 2), Scalar(1));
    EXPECT_EQ(p.differential()->nonzero_count(), 1u);
    EXPECT_FALSE(matrix_trace_space(2).is_graded());
}

TEST(Spaces, Recipes) {
    EXPECT_EQ(space_from_recipe("finite:1/3,2/3").name, "finite:1/3,2/3");
    EXPECT_EQ(space_from_recipe("finite:1/2,2/4").name, "finite:1/2,1/2");
    EXPECT_EQ(space_from_recipe("matrix:3").space.space().dim(), 9u);
    EXPECT_EQ(space_from_recipe("two-term").space.space().dim(), 3u);
    for (const char* bad : {"", "finite:", "finite:1/2", "finite:a,b", "matrix:4", "matrix:", "two", "torus:2"}) {
        EXPECT_THROW(space_from_recipe(bad), std::invalid_argument) << bad;
    }
}

TEST(Spaces, RecipeVariables) {
    const NamedSpace m = matrix_trace_recipe(3);
    ASSERT_EQ(m.variables.size(), 2u);
    EXPECT_EQ(m.variables[0].first, "X");
    EXPECT_EQ(m.variables[0].second[0], Scalar(1));
    EXPECT_EQ(m.variables[0].second[4], Scalar(-1));
    EXPECT_EQ(m.variables[0].second[8], Scalar(1));
    EXPECT_EQ(m.variables[1].first, "one");
}

TEST(Spaces, BundledRecipesParse) {
    const auto recipes = bundled_recipes();
    EXPECT_EQ(recipes.size(), 6u);
    for (const auto& [recipe, order] : recipes) {
        EXPECT_GE(order, 4u);
        EXPECT_NO_THROW(space_from_recipe(recipe)) << recipe;
    }
}
