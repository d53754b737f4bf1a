#include <einstein/app.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return einstein::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
