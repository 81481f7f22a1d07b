#include <iostream>
int main() { std::cout << "askey-shift\n"; }
