import requests
import json
import time

BASE_URL = "http://localhost:5000"

# dP6 的扇和它的全部自同构群 D12
DP6_FAN = {"rays": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]}
D12_GROUP = {"generators": [[[1, -1], [1, 0]], [[0, 1], [1, 0]]]}
P2_FAN = {"rays": [[1, 0], [0, 1], [-1, -1]]}

def test_health_check():
    """测试健康检查接口"""
    print("=== 测试健康检查接口 ===")
    try:
        response = requests.get(f"{BASE_URL}/health")
        print(f"状态码: {response.status_code}")
        print(f"响应: {response.json()}")
        return response.status_code == 200
    except Exception as e:
        print(f"健康检查失败: {e}")
        return False

def test_validate():
    """测试扇的校验接口"""
    print("\n=== 测试扇的校验接口 ===")
    try:
        response = requests.post(f"{BASE_URL}/api/surface/validate", json={"fan": DP6_FAN})
        print(f"状态码: {response.status_code}")
        result = response.json().get('result', {})
        print(f"自交数序列: {result.get('self_intersections')}")
        return response.status_code == 200
    except Exception as e:
        print(f"校验失败: {e}")
        return False

def test_report():
    """测试完整报告接口"""
    print("\n=== 测试完整报告接口 ===")
    payload = {
        "fan": DP6_FAN,
        "group": D12_GROUP
    }

    try:
        print("发送报告请求...")
        response = requests.post(
            f"{BASE_URL}/api/surface/report",
            json=payload,
            headers={"Content-Type": "application/json"}
        )

        print(f"状态码: {response.status_code}")

        if response.status_code == 200:
            report = response.json()
            result = report.get('result', {})
            print("✅ 报告生成成功!")
            print(f"极小模型: {result.get('minimal')}")
            print(f"置换基轨道: {result.get('basis', {}).get('orbit_sizes')}")
            print(f"例外序列块: {result.get('collection', {}).get('block_sizes')}")
            print(f"动机分解: {result.get('decomposition', {}).get('product')}")
            print(f"\n证书摘要:")
            print(json.dumps({k: v.get('passed') for k, v in report.get('certificates', {}).items()},
                             ensure_ascii=False))
            return True
        else:
            print(f"❌ 报告失败: {response.text}")
            return False

    except Exception as e:
        print(f"❌ 请求失败: {e}")
        return False

def test_reversed_collection():
    """测试证书失败时返回 422"""
    print("\n=== 测试反序例外序列 ===")
    try:
        response = requests.post(
            f"{BASE_URL}/api/surface/collection",
            json={"fan": P2_FAN, "order": "reversed"}
        )
        print(f"状态码: {response.status_code}")
        violation = response.json().get('certificates', {}).get('collection', {}).get('violation')
        print(f"第一个不满足的对: {violation}")
        return response.status_code == 422
    except Exception as e:
        print(f"❌ 请求失败: {e}")
        return False

def test_swagger_docs():
    """测试Swagger文档访问"""
    print("\n=== 测试Swagger文档 ===")
    try:
        response = requests.get(f"{BASE_URL}/swagger/")
        print(f"Swagger文档状态码: {response.status_code}")
        if response.status_code == 200:
            print("✅ Swagger文档可访问")
            print(f"📖 访问地址: {BASE_URL}/swagger/")
            return True
        else:
            print("❌ Swagger文档不可访问")
            return False
    except Exception as e:
        print(f"❌ Swagger文档测试失败: {e}")
        return False

def main():
    """主测试函数"""
    print("🚀 开始测试环面曲面等变分类服务")
    print("=" * 50)

    # 等待服务完全启动
    print("等待服务启动...")
    time.sleep(2)

    # 执行测试
    tests = [
        ("健康检查", test_health_check),
        ("扇的校验", test_validate),
        ("完整报告", test_report),
        ("反序例外序列", test_reversed_collection),
        ("Swagger文档", test_swagger_docs)
    ]

    results = []
    for test_name, test_func in tests:
        try:
            result = test_func()
            results.append((test_name, result))
        except Exception as e:
            print(f"❌ {test_name}测试异常: {e}")
            results.append((test_name, False))

    # 输出测试结果摘要
    print("\n" + "=" * 50)
    print("📊 测试结果摘要:")
    print("=" * 50)

    passed = 0
    for test_name, result in results:
        status = "✅ 通过" if result else "❌ 失败"
        print(f"{test_name}: {status}")
        if result:
            passed += 1

    print(f"\n总计: {passed}/{len(results)} 个测试通过")

    if passed == len(results):
        print("🎉 所有测试通过！服务运行正常。")
    else:
        print("⚠️  部分测试失败，请检查服务配置。")

if __name__ == "__main__":
    main()
