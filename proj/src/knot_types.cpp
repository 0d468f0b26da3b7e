namespace legfront {}
