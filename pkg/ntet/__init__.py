"""
n-TET keyboard theory: layouts, key signatures and scale evolution.

模块划分：
 - ring：模运算与循环移位
 - config：键盘排列、计数与三条公理
 - signature：调号与调号矩阵
 - theory：生成序列、音级、五度圈推广、原形与变体结构
 - evolution：(n_w, n_b) 演化、W/V/U 序列与两个吸引子常数
 - report / render / settings / queries / cli：输出、配置与命令行
"""

__version__ = '0.1.0'
