// Generated by tools/gen_lebedev.py. Do not edit.
#include "ddlpb/lebedev_tables.hpp"

namespace ddlpb::detail {

namespace {

constexpr LebedevNode kLeb6[6] = {
    {1, 0, 0, 0.16666666666666666},
    {-1, 0, 0, 0.16666666666666666},
    {0, 1, 0, 0.16666666666666666},
    {0, -1, 0, 0.16666666666666666},
    {0, 0, 1, 0.16666666666666666},
    {0, 0, -1, 0.16666666666666666},
};

constexpr LebedevNode kLeb14[14] = {
    {1, 0, 0, 0.066666666666666666},
    {-1, 0, 0, 0.066666666666666666},
    {0, 1, 0, 0.066666666666666666},
    {0, -1, 0, 0.066666666666666666},
    {0, 0, 1, 0.066666666666666666},
    {0, 0, -1, 0.066666666666666666},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
};

constexpr LebedevNode kLeb26[26] = {
    {1, 0, 0, 0.047619047619047623},
    {-1, 0, 0, 0.047619047619047623},
    {0, 1, 0, 0.047619047619047623},
    {0, -1, 0, 0.047619047619047623},
    {0, 0, 1, 0.047619047619047623},
    {0, 0, -1, 0.047619047619047623},
    {0, 0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, 0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
};

constexpr LebedevNode kLeb38[38] = {
    {1, 0, 0, 0.0095238095238095247},
    {-1, 0, 0, 0.0095238095238095247},
    {0, 1, 0, 0.0095238095238095247},
    {0, -1, 0, 0.0095238095238095247},
    {0, 0, 1, 0.0095238095238095247},
    {0, 0, -1, 0.0095238095238095247},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {0, 0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, 0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, 0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, 0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
};

constexpr LebedevNode kLeb50[50] = {
    {1, 0, 0, 0.0126984126984127},
    {-1, 0, 0, 0.0126984126984127},
    {0, 1, 0, 0.0126984126984127},
    {0, -1, 0, 0.0126984126984127},
    {0, 0, 1, 0.0126984126984127},
    {0, 0, -1, 0.0126984126984127},
    {0, 0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, 0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
};

constexpr LebedevNode kLeb74[74] = {
    {1, 0, 0, 0.00051306717973384638},
    {-1, 0, 0, 0.00051306717973384638},
    {0, 1, 0, 0.00051306717973384638},
    {0, -1, 0, 0.00051306717973384638},
    {0, 0, 1, 0.00051306717973384638},
    {0, 0, -1, 0.00051306717973384638},
    {0, 0.70710678118654757, 0.70710678118654757, 0.016604069565742039},
    {0, -0.70710678118654757, 0.70710678118654757, 0.016604069565742039},
    {0, 0.70710678118654757, -0.70710678118654757, 0.016604069565742039},
    {0, -0.70710678118654757, -0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0, 0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0, -0.70710678118654757, 0.016604069565742039},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.016604069565742039},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.016604069565742039},
    {0.70710678118654757, 0.70710678118654757, 0, 0.016604069565742039},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.016604069565742039},
    {0.70710678118654757, -0.70710678118654757, 0, 0.016604069565742039},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.016604069565742039},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.029586038961038959},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.029586038961038959},
    {0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.026576207082159461},
    {-0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {-0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.026576207082159461},
    {0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {-0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.026576207082159461},
    {0.3207726489807764, 0.94715622136258792, 0, 0.01652217099371571},
    {-0.3207726489807764, 0.94715622136258792, 0, 0.01652217099371571},
    {0.3207726489807764, -0.94715622136258792, 0, 0.01652217099371571},
    {-0.3207726489807764, -0.94715622136258792, 0, 0.01652217099371571},
    {0.94715622136258792, 0.3207726489807764, 0, 0.01652217099371571},
    {-0.94715622136258792, 0.3207726489807764, 0, 0.01652217099371571},
    {0.94715622136258792, -0.3207726489807764, 0, 0.01652217099371571},
    {-0.94715622136258792, -0.3207726489807764, 0, 0.01652217099371571},
    {0.3207726489807764, 0, 0.94715622136258792, 0.01652217099371571},
    {-0.3207726489807764, 0, 0.94715622136258792, 0.01652217099371571},
    {0.3207726489807764, 0, -0.94715622136258792, 0.01652217099371571},
    {-0.3207726489807764, 0, -0.94715622136258792, 0.01652217099371571},
    {0.94715622136258792, 0, 0.3207726489807764, 0.01652217099371571},
    {-0.94715622136258792, 0, 0.3207726489807764, 0.01652217099371571},
    {0.94715622136258792, 0, -0.3207726489807764, 0.01652217099371571},
    {-0.94715622136258792, 0, -0.3207726489807764, 0.01652217099371571},
    {0, 0.3207726489807764, 0.94715622136258792, 0.01652217099371571},
    {0, -0.3207726489807764, 0.94715622136258792, 0.01652217099371571},
    {0, 0.3207726489807764, -0.94715622136258792, 0.01652217099371571},
    {0, -0.3207726489807764, -0.94715622136258792, 0.01652217099371571},
    {0, 0.94715622136258792, 0.3207726489807764, 0.01652217099371571},
    {0, -0.94715622136258792, 0.3207726489807764, 0.01652217099371571},
    {0, 0.94715622136258792, -0.3207726489807764, 0.01652217099371571},
    {0, -0.94715622136258792, -0.3207726489807764, 0.01652217099371571},
};

constexpr LebedevNode kLeb86[86] = {
    {1, 0, 0, 0.011544011544011539},
    {-1, 0, 0, 0.011544011544011539},
    {0, 1, 0, 0.011544011544011539},
    {0, -1, 0, 0.011544011544011539},
    {0, 0, 1, 0.011544011544011539},
    {0, 0, -1, 0.011544011544011539},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.011943909085856278},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.011943909085856278},
    {0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.0111105557106034},
    {-0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {-0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.0111105557106034},
    {0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {-0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.0111105557106034},
    {0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.011876501294537139},
    {-0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {-0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.011876501294537139},
    {0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {-0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.011876501294537139},
    {0.37424303909034118, 0.92733065715117247, 0, 0.011812303746904479},
    {-0.37424303909034118, 0.92733065715117247, 0, 0.011812303746904479},
    {0.37424303909034118, -0.92733065715117247, 0, 0.011812303746904479},
    {-0.37424303909034118, -0.92733065715117247, 0, 0.011812303746904479},
    {0.92733065715117247, 0.37424303909034118, 0, 0.011812303746904479},
    {-0.92733065715117247, 0.37424303909034118, 0, 0.011812303746904479},
    {0.92733065715117247, -0.37424303909034118, 0, 0.011812303746904479},
    {-0.92733065715117247, -0.37424303909034118, 0, 0.011812303746904479},
    {0.37424303909034118, 0, 0.92733065715117247, 0.011812303746904479},
    {-0.37424303909034118, 0, 0.92733065715117247, 0.011812303746904479},
    {0.37424303909034118, 0, -0.92733065715117247, 0.011812303746904479},
    {-0.37424303909034118, 0, -0.92733065715117247, 0.011812303746904479},
    {0.92733065715117247, 0, 0.37424303909034118, 0.011812303746904479},
    {-0.92733065715117247, 0, 0.37424303909034118, 0.011812303746904479},
    {0.92733065715117247, 0, -0.37424303909034118, 0.011812303746904479},
    {-0.92733065715117247, 0, -0.37424303909034118, 0.011812303746904479},
    {0, 0.37424303909034118, 0.92733065715117247, 0.011812303746904479},
    {0, -0.37424303909034118, 0.92733065715117247, 0.011812303746904479},
    {0, 0.37424303909034118, -0.92733065715117247, 0.011812303746904479},
    {0, -0.37424303909034118, -0.92733065715117247, 0.011812303746904479},
    {0, 0.92733065715117247, 0.37424303909034118, 0.011812303746904479},
    {0, -0.92733065715117247, 0.37424303909034118, 0.011812303746904479},
    {0, 0.92733065715117247, -0.37424303909034118, 0.011812303746904479},
    {0, -0.92733065715117247, -0.37424303909034118, 0.011812303746904479},
};

constexpr LebedevNode kLeb110[110] = {
    {1, 0, 0, 0.0038282704949371611},
    {-1, 0, 0, 0.0038282704949371611},
    {0, 1, 0, 0.0038282704949371611},
    {0, -1, 0, 0.0038282704949371611},
    {0, 0, 1, 0.0038282704949371611},
    {0, 0, -1, 0.0038282704949371611},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {0, 0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, 0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, 0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, 0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
};

}  // namespace

const std::array<LebedevTable, 8> kLebedevTables = {{
    {6, 3, std::span<const LebedevNode>(kLeb6)},
    {14, 5, std::span<const LebedevNode>(kLeb14)},
    {26, 7, std::span<const LebedevNode>(kLeb26)},
    {38, 9, std::span<const LebedevNode>(kLeb38)},
    {50, 11, std::span<const LebedevNode>(kLeb50)},
    {74, 13, std::span<const LebedevNode>(kLeb74)},
    {86, 15, std::span<const LebedevNode>(kLeb86)},
    {110, 17, std::span<const LebedevNode>(kLeb110)},
}};

}  // namespace ddlpb::detail
