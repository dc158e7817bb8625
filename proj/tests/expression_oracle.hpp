#pragma once

// Random Boolean expression trees with a direct evaluator, printed with
// minimal or extra parentheses.

#include <memory>
#include <random>
#include <string>

#include "trapnet/core.hpp"

namespace trapnet::testing {

struct Tree {
    char op = 'v';  // 'v' variable, 'c' constant, '!', '&', '^', '|'
    int var = 0;
    bool value = false;
    std::unique_ptr<Tree> left, right;
};

inline int precedence(char op) {
    switch (op) {
    case '|': return 1;
    case '^': return 2;
    case '&': return 3;
    case '!': return 4;
    default: return 5;
    }
}

inline std::unique_ptr<Tree> random_tree(std::mt19937_64& rng, int n, int depth) {
    auto t = std::make_unique<Tree>();
    const int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
    switch (pick) {
    case 0: t->op = 'v'; t->var = 1 + static_cast<int>(rng() % static_cast<unsigned>(n)); break;
    case 1: t->op = 'c'; t->value = rng() % 2; break;
    case 2: t->op = '!'; t->left = random_tree(rng, n, depth - 1); break;
    default:
        t->op = "&^|"[pick - 3];
        t->left = random_tree(rng, n, depth - 1);
        t->right = random_tree(rng, n, depth - 1);
    }
    return t;
}

inline bool eval(const Tree& t, Word x) {
    switch (t.op) {
    case 'v': return (x >> (t.var - 1)) & 1u;
    case 'c': return t.value;
    case '!': return !eval(*t.left, x);
    case '&': return eval(*t.left, x) && eval(*t.right, x);
    case '^': return eval(*t.left, x) != eval(*t.right, x);
    default: return eval(*t.left, x) || eval(*t.right, x);
    }
}

inline std::string print(const Tree& t, std::mt19937_64& rng) {
    auto wrap = [&](const Tree& child, int parent) {
        std::string s = print(child, rng);
        return precedence(child.op) < parent || rng() % 4 == 0 ? "(" + s + ")" : s;
    };
    switch (t.op) {
    case 'v': return "x" + std::to_string(t.var);
    case 'c': return t.value ? "1" : "0";
    case '!': return "!" + wrap(*t.left, precedence('!'));
    default: return wrap(*t.left, precedence(t.op)) + " " + t.op + " " + wrap(*t.right, precedence(t.op));
    }
}

}  // namespace trapnet::testing
