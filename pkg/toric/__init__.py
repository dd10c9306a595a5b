"""光滑完备环面曲面的等变分类工具"""
