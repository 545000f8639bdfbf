namespace cc4 {}
